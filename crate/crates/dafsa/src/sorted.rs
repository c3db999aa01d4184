//! Construction from lexicographically sorted input.
//!
//! Each new word shares a prefix with the previous one; everything the
//! previous word left hanging past that prefix can no longer change,
//! so it is minimized (replace-or-register, bottom-up) right away. A
//! final pass over the last word's path finishes the job. At any point
//! the only unregistered states are the ones on the previous word's
//! path, which is what keeps peak memory at minimal-automaton size
//! plus one word length.

use std::time::Instant;

use crate::automaton::{Automaton, Label, StateId, Word};
use crate::error::{Error, Result};
use crate::register::{signature_of, Register};
use crate::stats::BuildStats;

/// Incremental builder for sorted (non-decreasing) word sequences.
/// Adjacent duplicates are skipped; an out-of-order word aborts the
/// build.
pub struct SortedBuilder {
    a: Automaton,
    register: Register,
    /// States of the previous word's path, start state included.
    path: Vec<StateId>,
    prev: Option<Word>,
    position: u64,
    rr_visits: u64,
    duplicates: u64,
    started: Instant,
}

impl Default for SortedBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl SortedBuilder {
    pub fn new() -> Self {
        let a = Automaton::new();
        let path = vec![a.start()];
        SortedBuilder {
            a,
            register: Register::new(),
            path,
            prev: None,
            position: 0,
            rr_visits: 0,
            duplicates: 0,
            started: Instant::now(),
        }
    }

    pub fn automaton(&self) -> &Automaton {
        &self.a
    }

    /// Insert the next word in sorted order.
    pub fn insert(&mut self, word: &Word) -> Result<()> {
        self.position += 1;
        if let Some(prev) = &self.prev {
            if word < prev {
                return Err(Error::OutOfOrder {
                    position: self.position,
                });
            }
            if word == prev {
                self.duplicates += 1;
                return Ok(());
            }
        }

        let (prefix_len, last_state) = self.a.common_prefix(word);
        // With sorted input the common prefix is also the longest
        // common prefix with the previous word, so it runs along the
        // cached path.
        debug_assert_eq!(last_state, self.path[prefix_len]);

        // Minimize the previous word's tail hanging below the prefix.
        if !self.a.transitions(last_state)?.is_empty() {
            let visits = replace_or_register_path(
                &mut self.a,
                &mut self.register,
                &self.path[prefix_len..],
            )?;
            self.rr_visits += visits;
        }
        self.path.truncate(prefix_len + 1);

        let suffix = &word.labels()[prefix_len..];
        debug_assert!(
            !suffix.is_empty() || self.prev.is_none(),
            "an empty suffix means a duplicate, which was skipped above",
        );
        let chain = add_suffix(&mut self.a, last_state, suffix)?;
        self.path.extend(chain);
        self.prev = Some(word.clone());

        #[cfg(debug_assertions)]
        {
            debug_assert!(self.a.check_acyclic());
            debug_assert!(self.a.check_in_degrees());
        }
        Ok(())
    }

    /// Finish the build: minimize the last word's path from the start
    /// state down and discard the register.
    pub fn finish(mut self) -> (Automaton, BuildStats) {
        if !self
            .a
            .transitions(self.a.start())
            .expect("start is live")
            .is_empty()
        {
            let visits = replace_or_register_path(&mut self.a, &mut self.register, &self.path)
                .expect("final pass operates on live states");
            self.rr_visits += visits;
        }
        let stats = BuildStats {
            words_read: self.position,
            duplicates_skipped: self.duplicates,
            final_states: self.a.final_count() as u64,
            live_states: self.a.live_count() as u64,
            transitions: self.a.transition_count() as u64,
            peak_live_states: self.a.peak_live() as u64,
            rr_visits: self.rr_visits,
            wall_time: self.started.elapsed(),
        };
        debug_assert!(self.a.check_reachable());
        (self.a, stats)
    }
}

/// Build the minimal automaton for a sorted word sequence.
pub fn build_sorted(words: impl IntoIterator<Item = Word>) -> Result<Automaton> {
    build_sorted_with_stats(words).map(|(a, _)| a)
}

pub fn build_sorted_with_stats(
    words: impl IntoIterator<Item = Word>,
) -> Result<(Automaton, BuildStats)> {
    let mut b = SortedBuilder::new();
    for word in words {
        b.insert(&word)?;
    }
    Ok(b.finish())
}

/// Append a fresh chain of states recognizing `suffix` below `from`;
/// the last chain state is final. An empty suffix marks `from` itself
/// final. Returns the created chain.
pub fn add_suffix(a: &mut Automaton, from: StateId, suffix: &[Label]) -> Result<Vec<StateId>> {
    if suffix.is_empty() {
        a.set_final(from, true)?;
        return Ok(Vec::new());
    }
    debug_assert!(
        a.delta(from, suffix[0])?.is_none(),
        "suffix must branch on a fresh label",
    );
    let mut chain = Vec::with_capacity(suffix.len());
    let mut cur = from;
    for (i, &label) in suffix.iter().enumerate() {
        let next = a.add_state(i + 1 == suffix.len());
        a.set_transition(cur, label, next)?;
        chain.push(next);
        cur = next;
    }
    Ok(chain)
}

/// Target of the greatest-label transition; with sorted input this is
/// the child added most recently.
pub fn last_child(a: &Automaton, state: StateId) -> Result<StateId> {
    a.transitions(state)?
        .last()
        .map(|&(_, t)| t)
        .ok_or(Error::NoChildren)
}

/// Replace-or-register along the last-child chain below `state`: walk
/// to the end of the previously added word, then bottom-up either
/// merge each state with its registered equivalent or register it as a
/// new class representative.
pub fn replace_or_register_sorted(
    a: &mut Automaton,
    register: &mut Register,
    state: StateId,
) -> Result<()> {
    let mut chain = vec![state];
    let mut cur = state;
    loop {
        let child = last_child(a, cur)?;
        chain.push(child);
        if a.transitions(child)?.is_empty() {
            break;
        }
        cur = child;
    }
    replace_or_register_path(a, register, &chain)?;
    Ok(())
}

/// Core of the sorted minimization pass: process `(parent, child)`
/// pairs of `path` from the deepest pair upward. Returns the number of
/// states processed.
fn replace_or_register_path(
    a: &mut Automaton,
    register: &mut Register,
    path: &[StateId],
) -> Result<u64> {
    let mut visits = 0;
    for i in (1..path.len()).rev() {
        let parent = path[i - 1];
        let child = path[i];
        debug_assert_eq!(
            last_child(a, parent)?,
            child,
            "cached path must follow the last-child chain",
        );
        visits += 1;
        let sig = signature_of(a, child)?;
        match register.lookup(&sig) {
            Some(existing) => {
                let &(label, _) = a
                    .transitions(parent)?
                    .last()
                    .expect("parent has at least the child transition");
                a.set_transition(parent, label, existing)?;
                a.delete_state(child)?;
            }
            None => register.insert(a, child)?,
        }
    }
    Ok(visits)
}
