//! Independent ground-truth pipeline: build a trie, minimize it by
//! exhaustive bottom-up class assignment, and render canonical forms.
//!
//! This is the two-phase construction both incremental builders are
//! validated against. It deliberately shares no code with the
//! register-based incremental path: classes here are computed from
//! scratch by a fixed-point over state heights.

use std::collections::HashMap;

use crate::automaton::{Automaton, Label, StateId, Word};
use crate::error::{Error, Result};

/// Tree-shaped automaton accepting exactly the given set: no state
/// sharing, every state has at most one incoming transition. Interior
/// states may be final.
pub fn build_trie(words: impl IntoIterator<Item = Word>) -> Automaton {
    let mut a = Automaton::new();
    for word in words {
        let mut cur = a.start();
        for &label in word.labels() {
            cur = match a.delta(cur, label).expect("trie states are live") {
                Some(next) => next,
                None => {
                    let next = a.add_state(false);
                    a.set_transition(cur, label, next)
                        .expect("fresh chain cannot form a cycle");
                    next
                }
            };
        }
        a.set_final(cur, true).expect("live");
    }
    a
}

/// Minimize an acyclic automaton with only reachable states by
/// bottom-up class assignment: states are processed in increasing
/// height order, and two states share a class iff their final flags
/// and (label, child class) lists agree. Returns a fresh automaton
/// with one state per class.
pub fn minimize_exhaustive(a: &Automaton) -> Result<Automaton> {
    if !a.check_acyclic() {
        return Err(Error::CyclicInput);
    }

    // Height of every live state, iteratively.
    let mut heights: HashMap<StateId, u32> = HashMap::new();
    for root in a.live_states() {
        let mut stack = vec![(root, false)];
        while let Some((q, expanded)) = stack.pop() {
            if heights.contains_key(&q) {
                continue;
            }
            let arcs = a.transitions(q)?;
            if expanded {
                let h = arcs.iter().map(|(_, t)| heights[t] + 1).max().unwrap_or(0);
                heights.insert(q, h);
            } else {
                stack.push((q, true));
                for &(_, t) in arcs {
                    if !heights.contains_key(&t) {
                        stack.push((t, false));
                    }
                }
            }
        }
    }

    let mut order: Vec<(u32, StateId)> = heights.iter().map(|(&q, &h)| (h, q)).collect();
    order.sort(); // height, then slot index: deterministic

    // Class key: final flag + (label, child class id) pairs.
    type ClassKey = (bool, Vec<(Label, usize)>);
    let mut class_of: HashMap<StateId, usize> = HashMap::new();
    let mut classes: HashMap<ClassKey, usize> = HashMap::new();
    let mut class_arcs: Vec<(bool, Vec<(Label, usize)>)> = Vec::new();
    for (_, q) in order {
        let key: ClassKey = (
            a.is_final(q)?,
            a.transitions(q)?
                .iter()
                .map(|&(l, t)| (l, class_of[&t]))
                .collect(),
        );
        let id = match classes.get(&key) {
            Some(&id) => id,
            None => {
                let id = class_arcs.len();
                class_arcs.push(key.clone());
                classes.insert(key, id);
                id
            }
        };
        class_of.insert(q, id);
    }

    // Assemble the quotient automaton.
    let mut out = Automaton::new();
    let start_class = class_of[&a.start()];
    let mut state_of_class: Vec<Option<StateId>> = vec![None; class_arcs.len()];
    state_of_class[start_class] = Some(out.start());
    out.set_final(out.start(), class_arcs[start_class].0)
        .expect("live");
    for (id, (is_final, _)) in class_arcs.iter().enumerate() {
        if id != start_class {
            state_of_class[id] = Some(out.add_state(*is_final));
        }
    }
    for (id, (_, arcs)) in class_arcs.iter().enumerate() {
        let src = state_of_class[id].expect("assigned above");
        for &(label, target_class) in arcs {
            let dst = state_of_class[target_class].expect("assigned above");
            out.set_transition(src, label, dst)
                .expect("quotient of an acyclic automaton is acyclic");
        }
    }
    Ok(out)
}

/// Deterministic rendering of an automaton: states renumbered in
/// depth-first pre-order from the start state following ascending
/// labels, then printed one per line with their final flag and arcs.
/// Two acyclic deterministic automata are isomorphic iff their
/// canonical forms are byte-equal. This is also the `DAFSA 1` file
/// format.
pub fn canonical_form(a: &Automaton) -> Vec<u8> {
    let order = canonical_order(a);
    let number: HashMap<StateId, usize> =
        order.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    let mut out = String::new();
    out.push_str("DAFSA 1\n");
    out.push_str(&format!("states {} start 0\n", order.len()));
    for (i, &q) in order.iter().enumerate() {
        out.push_str(&format!(
            "{i} {}",
            if a.is_final(q).expect("live") { 'F' } else { '.' }
        ));
        for &(label, target) in a.transitions(q).expect("live") {
            out.push_str(&format!(" {:02x}:{}", label.value(), number[&target]));
        }
        out.push('\n');
    }
    out.into_bytes()
}

/// Reachable states in canonical (pre-order, ascending-label) order,
/// start state first.
pub(crate) fn canonical_order(a: &Automaton) -> Vec<StateId> {
    let mut order = Vec::with_capacity(a.live_count());
    let mut seen: HashMap<StateId, ()> = HashMap::new();
    let mut stack = vec![a.start()];
    while let Some(q) = stack.pop() {
        if seen.insert(q, ()).is_some() {
            continue;
        }
        order.push(q);
        // Push in reverse so the smallest label is visited first.
        for &(_, t) in a.transitions(q).expect("live").iter().rev() {
            if !seen.contains_key(&t) {
                stack.push(t);
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn words(items: &[&str]) -> Vec<Word> {
        items.iter().map(|s| w(s)).collect()
    }

    /// Brute-force right language of a state, for cross-checking the
    /// class partition.
    fn right_language(a: &Automaton, q: StateId) -> BTreeSet<Vec<u8>> {
        let mut out = BTreeSet::new();
        let mut stack = vec![(q, Vec::new())];
        while let Some((s, prefix)) = stack.pop() {
            if a.is_final(s).unwrap() {
                out.insert(prefix.clone());
            }
            for &(l, t) in a.transitions(s).unwrap() {
                let mut next = prefix.clone();
                next.push(l.value());
                stack.push((t, next));
            }
        }
        out
    }

    #[test]
    fn trie_of_nested_prefixes() {
        let a = build_trie(words(&["ab", "abc"]));
        assert_eq!(a.live_count(), 4);
        assert_eq!(a.final_count(), 2);
        assert_eq!(a.enumerate_language(), words(&["ab", "abc"]));
    }

    #[test]
    fn trie_never_shares_states() {
        let a = build_trie(words(&["abd", "bad"]));
        assert_eq!(a.live_count(), 7); // root + 3 per word
        for q in a.live_states() {
            let real = a.in_degree(q).unwrap() - u32::from(q == a.start());
            assert!(real <= 1);
        }
    }

    #[test]
    fn empty_trie_is_a_single_root() {
        let a = build_trie([]);
        assert_eq!(a.live_count(), 1);
        assert!(a.enumerate_language().is_empty());
    }

    #[test]
    fn minimize_merges_shared_suffixes() {
        let m = minimize_exhaustive(&build_trie(words(&["abd", "bad"]))).unwrap();
        assert_eq!(m.live_count(), 5);
        assert_eq!(m.enumerate_language(), words(&["abd", "bad"]));
        let m = minimize_exhaustive(&build_trie(words(&["abd", "bad", "bae"]))).unwrap();
        assert_eq!(m.live_count(), 6);
        assert_eq!(m.enumerate_language(), words(&["abd", "bad", "bae"]));
    }

    #[test]
    fn minimize_is_idempotent() {
        let m1 = minimize_exhaustive(&build_trie(words(&["abcde", "fghde", "fghdghde"]))).unwrap();
        let m2 = minimize_exhaustive(&m1).unwrap();
        assert_eq!(m1.live_count(), m2.live_count());
        assert_eq!(canonical_form(&m1), canonical_form(&m2));
    }

    #[test]
    fn minimize_preserves_language_exactly() {
        let input = words(&["", "a", "ab", "ba", "bb", "aab"]);
        let trie = build_trie(input.clone());
        let m = minimize_exhaustive(&trie).unwrap();
        assert_eq!(trie.enumerate_language(), m.enumerate_language());
    }

    #[test]
    fn minimal_output_has_pairwise_distinct_right_languages() {
        let m = minimize_exhaustive(&build_trie(words(&["abd", "bad", "bae", "ab"]))).unwrap();
        let states: Vec<StateId> = m.live_states().collect();
        for (i, &p) in states.iter().enumerate() {
            for &q in &states[i + 1..] {
                assert_ne!(right_language(&m, p), right_language(&m, q));
            }
        }
    }

    #[test]
    fn class_partition_matches_right_language_partition() {
        // On the trie, two states end up merged iff their brute-force
        // right languages are equal.
        let trie = build_trie(words(&["abd", "bad", "bae"]));
        let m = minimize_exhaustive(&trie).unwrap();
        let langs: Vec<BTreeSet<Vec<u8>>> = trie
            .live_states()
            .map(|q| right_language(&trie, q))
            .collect();
        let distinct: BTreeSet<_> = langs.iter().collect();
        assert_eq!(distinct.len(), m.live_count());
        assert!(m.live_count() <= trie.live_count());
    }

    #[test]
    fn canonical_forms_capture_isomorphism() {
        // Same language built along different insertion paths.
        let m1 = minimize_exhaustive(&build_trie(words(&["abd", "bad"]))).unwrap();
        let m2 = minimize_exhaustive(&build_trie(words(&["bad", "abd"]))).unwrap();
        assert_eq!(canonical_form(&m1), canonical_form(&m2));
        let ma = minimize_exhaustive(&build_trie(words(&["a"]))).unwrap();
        let mb = minimize_exhaustive(&build_trie(words(&["b"]))).unwrap();
        assert_ne!(canonical_form(&ma), canonical_form(&mb));
    }

    #[test]
    fn minimize_rejects_cycles() {
        let mut a = Automaton::new();
        let p = a.add_state(false);
        let q = a.add_state(true);
        a.set_transition(a.start(), Label::new(b'a'), p).unwrap();
        a.set_transition(p, Label::new(b'b'), q).unwrap();
        a.set_transition_unchecked(q, Label::new(b'c'), p);
        assert!(matches!(minimize_exhaustive(&a), Err(Error::CyclicInput)));
    }
}
