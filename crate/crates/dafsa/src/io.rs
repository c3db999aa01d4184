//! Word-list ingestion, the `DAFSA 1` text format, and DOT export.
//!
//! The text format is canonical: states are renumbered in DFS
//! pre-order from the start state following ascending labels, so two
//! files are byte-equal exactly when the automata are isomorphic.
//!
//! ```text
//! DAFSA 1
//! states <N> start 0
//! <id> <F|.> <label-hex>:<target-id> ...
//! ```
//!
//! One state line per state in numbering order, arcs ascending by
//! label, LF line endings, no trailing whitespace.

use std::io::{BufRead, Write};

use crate::automaton::{Automaton, Label, StateId, Word};
use crate::error::{Error, Result};
use crate::oracle::canonical_form;

/// Streaming reader for newline-delimited word lists. Lines end with
/// LF or CRLF (both stripped); the bytes in between form the word, so
/// input does not have to be valid UTF-8, and an empty line is the
/// empty word.
pub struct WordReader<R> {
    source: R,
    offset: u64,
    buf: Vec<u8>,
}

impl<R: BufRead> WordReader<R> {
    pub fn new(source: R) -> Self {
        WordReader {
            source,
            offset: 0,
            buf: Vec::new(),
        }
    }
}

impl<R: BufRead> Iterator for WordReader<R> {
    type Item = Result<Word>;

    fn next(&mut self) -> Option<Self::Item> {
        self.buf.clear();
        match self.source.read_until(b'\n', &mut self.buf) {
            Ok(0) => None,
            Ok(n) => {
                self.offset += n as u64;
                let mut line = self.buf.as_slice();
                if line.last() == Some(&b'\n') {
                    line = &line[..line.len() - 1];
                    if line.last() == Some(&b'\r') {
                        line = &line[..line.len() - 1];
                    }
                }
                Some(Ok(Word::from_bytes(line)))
            }
            Err(source) => Some(Err(Error::IoAt {
                offset: self.offset,
                source,
            })),
        }
    }
}

/// Convenience wrapper around [`WordReader`].
pub fn read_words<R: BufRead>(source: R) -> WordReader<R> {
    WordReader::new(source)
}

/// Write the canonical text form of a finished automaton.
pub fn serialize(a: &Automaton, mut sink: impl Write) -> Result<()> {
    sink.write_all(&canonical_form(a))?;
    Ok(())
}

/// Parse the text format back into an automaton, reconstructing the
/// in-degree counters and validating version, determinism (strictly
/// increasing labels) and acyclicity.
pub fn deserialize(source: impl BufRead) -> Result<Automaton> {
    let mut lines = source.lines().enumerate();

    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty input"))?;
    let header = header.map_err(Error::Io)?;
    match header.strip_prefix("DAFSA ") {
        Some("1") => {}
        Some(version) => {
            return Err(Error::UnsupportedVersion {
                version: version.to_string(),
            })
        }
        None => return Err(Error::parse(1, "expected `DAFSA <version>` header")),
    }

    let (_, counts) = lines
        .next()
        .ok_or_else(|| Error::parse(2, "missing `states` line"))?;
    let counts = counts.map_err(Error::Io)?;
    let mut it = counts.split_whitespace();
    let state_count: usize = match (it.next(), it.next(), it.next(), it.next(), it.next()) {
        (Some("states"), Some(n), Some("start"), Some(start), None) => {
            let n = n
                .parse()
                .map_err(|_| Error::parse(2, "invalid state count"))?;
            let start: usize = start
                .parse()
                .map_err(|_| Error::parse(2, "invalid start id"))?;
            if start != 0 {
                return Err(Error::parse(2, "start state must be numbered 0"));
            }
            n
        }
        _ => return Err(Error::parse(2, "expected `states <N> start 0`")),
    };
    if state_count == 0 {
        return Err(Error::parse(2, "an automaton has at least its start state"));
    }

    let mut a = Automaton::new();
    let mut ids: Vec<StateId> = Vec::with_capacity(state_count);
    ids.push(a.start());
    for _ in 1..state_count {
        ids.push(a.add_state(false));
    }

    for expected in 0..state_count {
        let line_no = expected + 3;
        let (_, line) = lines
            .next()
            .ok_or_else(|| Error::parse(line_no, "missing state line"))?;
        let line = line.map_err(Error::Io)?;
        let mut fields = line.split(' ');

        let id: usize = fields
            .next()
            .filter(|s| !s.is_empty())
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(line_no, "expected state id"))?;
        if id != expected {
            return Err(Error::parse(
                line_no,
                format!("expected state id {expected}, found {id}"),
            ));
        }

        match fields.next() {
            Some("F") => a.set_final(ids[id], true).expect("live"),
            Some(".") => {}
            _ => return Err(Error::parse(line_no, "expected final flag `F` or `.`")),
        }

        let mut prev_label: Option<u8> = None;
        for arc in fields {
            let (hex, target) = arc
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, format!("malformed arc {arc:?}")))?;
            let label = u8::from_str_radix(hex, 16)
                .map_err(|_| Error::parse(line_no, format!("invalid label {hex:?}")))?;
            if hex.len() != 2 {
                return Err(Error::parse(
                    line_no,
                    format!("labels are two hex digits, found {hex:?}"),
                ));
            }
            if prev_label.is_some_and(|p| p >= label) {
                return Err(Error::parse(
                    line_no,
                    format!("duplicate or out-of-order label {hex}"),
                ));
            }
            prev_label = Some(label);
            let target: usize = target
                .parse()
                .map_err(|_| Error::parse(line_no, format!("invalid target id {target:?}")))?;
            if target >= state_count {
                return Err(Error::parse(
                    line_no,
                    format!("arc targets nonexistent state {target}"),
                ));
            }
            // Raw write: in-degrees are recounted below and acyclicity
            // is validated once over the whole graph.
            a.set_transition_unchecked(ids[id], Label::new(label), ids[target]);
        }
    }

    for (n, line) in lines {
        let line = line.map_err(Error::Io)?;
        if !line.is_empty() {
            return Err(Error::parse(n + 1, "trailing content after state lines"));
        }
    }

    a.recount_in_degrees();
    if !a.check_acyclic() {
        return Err(Error::parse(3, "transition graph contains a cycle"));
    }
    Ok(a)
}

/// Render the automaton as a DOT digraph with canonical numbering;
/// final states get a double circle.
pub fn export_dot(a: &Automaton, mut sink: impl Write) -> Result<()> {
    let order = crate::oracle::canonical_order(a);
    let number: std::collections::HashMap<StateId, usize> =
        order.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    writeln!(sink, "digraph dafsa {{")?;
    writeln!(sink, "    rankdir=LR;")?;
    writeln!(sink, "    node [shape=circle];")?;
    for (i, &q) in order.iter().enumerate() {
        if a.is_final(q).expect("live") {
            writeln!(sink, "    {i} [shape=doublecircle];")?;
        }
    }
    for (i, &q) in order.iter().enumerate() {
        for &(label, target) in a.transitions(q).expect("live") {
            writeln!(
                sink,
                "    {i} -> {} [label=\"{}\"];",
                number[&target],
                dot_label(label)
            )?;
        }
    }
    writeln!(sink, "}}")?;
    Ok(())
}

fn dot_label(label: Label) -> String {
    let b = label.value();
    match b {
        b'"' => "\\\"".to_string(),
        b'\\' => "\\\\".to_string(),
        0x21..=0x7e => (b as char).to_string(),
        _ => format!("0x{b:02x}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sorted::build_sorted;
    use std::io::Cursor;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn collect(input: &[u8]) -> Vec<Word> {
        read_words(Cursor::new(input.to_vec()))
            .collect::<Result<Vec<_>>>()
            .unwrap()
    }

    fn to_text(a: &Automaton) -> String {
        let mut buf = Vec::new();
        serialize(a, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn read_words_strips_line_endings() {
        assert_eq!(collect(b"abd\nbad\n"), vec![w("abd"), w("bad")]);
        assert_eq!(collect(b"abd\r\nbad\r\n"), vec![w("abd"), w("bad")]);
        assert_eq!(collect(b"abd"), vec![w("abd")]); // missing final newline
    }

    #[test]
    fn read_words_empty_line_is_epsilon() {
        assert_eq!(collect(b"\n"), vec![Word::new()]);
        assert_eq!(collect(b"a\n\nb\n"), vec![w("a"), Word::new(), w("b")]);
    }

    #[test]
    fn read_words_is_byte_transparent() {
        let input = [0xff, 0xfe, b'\n'];
        assert_eq!(collect(&input), vec![Word::from_bytes(&[0xff, 0xfe])]);
    }

    #[test]
    fn empty_language_serialization_is_pinned() {
        let a = Automaton::new();
        assert_eq!(to_text(&a), "DAFSA 1\nstates 1 start 0\n0 .\n");
    }

    #[test]
    fn small_dictionary_serialization_is_pinned() {
        // {abd, bad}: 5 states; DFS order: start, a-state, ab-state,
        // final leaf, b-state.
        let a = build_sorted([w("abd"), w("bad")]).unwrap();
        assert_eq!(
            to_text(&a),
            "DAFSA 1\nstates 5 start 0\n0 . 61:1 62:4\n1 . 62:2\n2 . 64:3\n3 F\n4 . 61:2\n"
        );
    }

    #[test]
    fn round_trip_preserves_canonical_form() {
        let a = build_sorted([w(""), w("abd"), w("bad"), w("bae")]).unwrap();
        let text = to_text(&a);
        let b = deserialize(Cursor::new(text.clone())).unwrap();
        assert_eq!(to_text(&b), text);
        assert_eq!(a.enumerate_language(), b.enumerate_language());
        assert!(b.check_in_degrees());
    }

    #[test]
    fn unsupported_version_is_rejected() {
        let err = deserialize(Cursor::new("DAFSA 2\nstates 1 start 0\n0 .\n")).unwrap_err();
        assert!(matches!(err, Error::UnsupportedVersion { version } if version == "2"));
    }

    #[test]
    fn malformed_inputs_are_parse_errors() {
        let cases: &[&str] = &[
            "",                                              // empty
            "BOGUS\n",                                       // header
            "DAFSA 1\nstates x start 0\n",                   // counts
            "DAFSA 1\nstates 1 start 0\n1 .\n",              // wrong id
            "DAFSA 1\nstates 1 start 0\n0 ?\n",              // flag
            "DAFSA 1\nstates 1 start 0\n0 . 61:7\n",         // dangling target
            "DAFSA 1\nstates 2 start 0\n0 . 61:1 61:1\n1 F\n", // duplicate label
            "DAFSA 1\nstates 2 start 0\n0 . zz:1\n1 F\n",    // bad hex
            "DAFSA 1\nstates 1 start 0\n",                   // missing state line
        ];
        for case in cases {
            let err = deserialize(Cursor::new(case.to_string())).unwrap_err();
            assert!(
                matches!(err, Error::Parse { .. }),
                "case {case:?} gave {err:?}"
            );
        }
    }

    #[test]
    fn cyclic_file_is_rejected() {
        let text = "DAFSA 1\nstates 2 start 0\n0 . 61:1\n1 F 62:0\n";
        let err = deserialize(Cursor::new(text.to_string())).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn dot_export_is_deterministic_and_marks_finals() {
        let a = build_sorted([w("abd"), w("bad")]).unwrap();
        let mut first = Vec::new();
        export_dot(&a, &mut first).unwrap();
        let mut second = Vec::new();
        export_dot(&a, &mut second).unwrap();
        assert_eq!(first, second);
        let text = String::from_utf8(first).unwrap();
        assert_eq!(text.matches("doublecircle").count(), 1);
        assert_eq!(text.matches(" -> ").count(), 5);
    }

    #[test]
    fn dot_escapes_non_printable_labels() {
        let a = build_sorted([Word::from_bytes(&[0x02, b'"'])]).unwrap();
        let mut buf = Vec::new();
        export_dot(&a, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("label=\"0x02\""));
        assert!(text.contains("label=\"\\\"\""));
    }
}
