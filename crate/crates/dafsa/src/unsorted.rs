//! Construction from unsorted input: words arrive in any order and the
//! automaton is fully minimal again after every single insertion.
//!
//! The shape of one insertion:
//!
//! 1. Walk the common prefix. If the word is already accepted, stop.
//! 2. If the prefix path crosses a confluence state (more than one
//!    in-transition), clone everything from the first confluence to
//!    the end of the prefix; modifying those states in place would
//!    alter other words. Otherwise withdraw the last prefix state from
//!    the register, since it is about to be mutated.
//! 3. Attach the rest of the word to the end of the (possibly cloned)
//!    prefix, replace-or-registering each new state from the deepest
//!    one up.
//! 4. Walk back toward the start state recomputing each path state's
//!    class. Suffix minimization can merge new states into pre-existing
//!    prefix-path states and thereby create *new* confluences, so the
//!    confluence test is repeated against live in-degrees at every
//!    step, cloning on demand. The walk stops at the first state whose
//!    representative did not change.

use std::time::Instant;

use crate::automaton::{Automaton, Label, StateId, Word};
use crate::error::{Error, Result};
use crate::register::{signature_of, Register};
use crate::sorted::add_suffix;
use crate::stats::BuildStats;

/// Incremental builder accepting words in any order. The automaton is
/// minimal for the inserted set after every [`UnsortedBuilder::add_word`].
pub struct UnsortedBuilder {
    a: Automaton,
    register: Register,
    position: u64,
    duplicates: u64,
    rr_visits: u64,
    started: Instant,
}

impl Default for UnsortedBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl UnsortedBuilder {
    pub fn new() -> Self {
        UnsortedBuilder {
            a: Automaton::new(),
            register: Register::new(),
            position: 0,
            duplicates: 0,
            rr_visits: 0,
            started: Instant::now(),
        }
    }

    /// Resume incremental insertion into a finished automaton, e.g.
    /// one read back from disk. `register` must have been produced by
    /// [`Register::rebuild`] on exactly this automaton.
    pub fn from_parts(a: Automaton, register: Register) -> Self {
        UnsortedBuilder {
            a,
            register,
            position: 0,
            duplicates: 0,
            rr_visits: 0,
            started: Instant::now(),
        }
    }

    pub fn automaton(&self) -> &Automaton {
        &self.a
    }

    /// Insert one word, keeping the automaton minimal for the enlarged
    /// language.
    pub fn add_word(&mut self, word: &Word) -> Result<()> {
        self.position += 1;
        let labels = word.labels();
        let path = self.a.common_prefix_path(word);
        let prefix_len = path.len() - 1;

        // Already accepted: strict no-op, register untouched.
        if prefix_len == labels.len() && self.a.is_final(path[prefix_len])? {
            self.duplicates += 1;
            return Ok(());
        }

        // Give the word a private spine to hang its suffix on.
        let mut spine = path.clone();
        match first_state(&self.a, &path) {
            None => {
                if prefix_len > 0 {
                    // The end of the prefix is about to change class.
                    self.register.remove(&self.a, path[prefix_len])?;
                }
            }
            Some(first) => {
                // Clone from the first confluence to the end of the
                // prefix. The head clone stays unreachable until the
                // upward pass connects it.
                for i in first..=prefix_len {
                    let clone = self.a.clone_state(path[i])?;
                    spine[i] = clone;
                    if i > first {
                        self.a.set_transition(spine[i - 1], labels[i - 1], clone)?;
                    }
                }
            }
        }

        add_suffix_minimized(
            &mut self.a,
            &mut self.register,
            spine[prefix_len],
            &labels[prefix_len..],
        )?;
        self.rr_visits += (labels.len() - prefix_len) as u64;

        // Recompute classes from the end of the prefix back toward the
        // start state.
        let mut child = spine[prefix_len];
        for i in (1..=prefix_len).rev() {
            let label = labels[i - 1];
            let parent = spine[i - 1];
            let is_clone = parent != path[i - 1];

            // `frontier` is set when the parent is a withdrawn original
            // whose outgoing arc did not need to change; if the child's
            // class does not change either, propagation can stop there.
            let (parent, frontier) = if is_clone || parent == self.a.start() {
                if self.a.delta(parent, label)? != Some(child) {
                    self.a.set_transition(parent, label, child)?;
                }
                (parent, false)
            } else if path[1..i]
                .iter()
                .any(|&p| self.a.is_confluence(p).expect("unprocessed path states are live"))
            {
                // The parent is reachable along some other word right
                // now (possibly a confluence created by the suffix
                // merges above), so modify a clone of it instead.
                let clone = self.a.clone_state(parent)?;
                self.a.set_transition(clone, label, child)?;
                spine[i - 1] = clone;
                (clone, false)
            } else {
                self.register.remove(&self.a, parent)?;
                let connected = self.a.delta(parent, label)? == Some(child);
                if !connected {
                    self.a.set_transition(parent, label, child)?;
                }
                (parent, connected)
            };

            let result = replace_or_register_unsorted(&mut self.a, &mut self.register, parent, label)?;
            self.rr_visits += 1;

            if frontier && result == child {
                // The parent still has the signature it was registered
                // under; put it back and stop.
                self.register.insert(&self.a, parent)?;
                self.check_boundary_invariants();
                return Ok(());
            }
            child = parent;
        }

        self.check_boundary_invariants();
        Ok(())
    }

    #[inline]
    fn check_boundary_invariants(&self) {
        #[cfg(debug_assertions)]
        {
            debug_assert!(self.a.check_acyclic());
            debug_assert!(self.a.check_in_degrees());
            debug_assert!(self.a.check_reachable());
            debug_assert_eq!(self.register.len(), self.a.live_count() - 1);
        }
    }

    pub fn finish(self) -> (Automaton, BuildStats) {
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
        (self.a, stats)
    }
}

/// Build the minimal automaton for an arbitrarily ordered word
/// sequence; canonically identical to a sorted build of the same set.
pub fn build_unsorted(words: impl IntoIterator<Item = Word>) -> Result<Automaton> {
    build_unsorted_with_stats(words).map(|(a, _)| a)
}

pub fn build_unsorted_with_stats(
    words: impl IntoIterator<Item = Word>,
) -> Result<(Automaton, BuildStats)> {
    let mut b = UnsortedBuilder::new();
    for word in words {
        b.add_word(&word)?;
    }
    Ok(b.finish())
}

/// Position of the first confluence state on a common-prefix path
/// (`path[0]` is the start state and is never one), or `None`.
pub fn first_state(a: &Automaton, prefix_path: &[StateId]) -> Option<usize> {
    (1..prefix_path.len()).find(|&i| {
        a.is_confluence(prefix_path[i])
            .expect("prefix path states are live")
    })
}

/// Attach `suffix` below `from`, merging every new state into the
/// register as it is settled, deepest first. Returns the state now
/// targeted by `from`'s transition on the first suffix label, or
/// `from` itself for an empty suffix (which just marks `from` final).
///
/// `from` must not be registered: it is either freshly cloned or was
/// withdrawn by the caller. Were it still registered, the lookup for a
/// new state equivalent to it would return `from` and redirect a
/// transition onto itself.
pub fn add_suffix_minimized(
    a: &mut Automaton,
    register: &mut Register,
    from: StateId,
    suffix: &[Label],
) -> Result<StateId> {
    if suffix.is_empty() {
        a.set_final(from, true)?;
        return Ok(from);
    }
    // Build the whole fresh chain first: every later register lookup
    // then sees current reachability, so an equivalent representative
    // can never be an ancestor of the state it would replace.
    let chain = add_suffix(a, from, suffix)?;
    for j in (0..chain.len()).rev() {
        let parent = if j == 0 { from } else { chain[j - 1] };
        replace_or_register_unsorted(a, register, parent, suffix[j])?;
    }
    Ok(a.delta(from, suffix[0])?.expect("suffix head was just attached"))
}

/// Settle the unregistered child `δ(state, label)`: if the register
/// holds an equivalent state, redirect the transition there and delete
/// the child, otherwise register the child as a new representative.
/// Returns the surviving target. Non-recursive: all of the child's
/// children are already representatives.
pub fn replace_or_register_unsorted(
    a: &mut Automaton,
    register: &mut Register,
    state: StateId,
    label: Label,
) -> Result<StateId> {
    let child = a
        .delta(state, label)?
        .ok_or_else(|| Error::Internal(format!("no transition on label {:#04x}", label.value())))?;
    let sig = signature_of(a, child)?;
    match register.lookup(&sig) {
        Some(existing) => {
            if existing == child {
                return Err(Error::Internal(
                    "replace_or_register called on a registered child".into(),
                ));
            }
            if a.in_degree(child)? != 1 {
                return Err(Error::Internal(
                    "replaced state must have exactly one incoming transition".into(),
                ));
            }
            // In debug builds set_transition re-checks that `existing`
            // cannot reach `state`, which is the cycle guard.
            a.set_transition(state, label, existing)?;
            a.delete_state(child)?;
            Ok(existing)
        }
        None => {
            register.insert(a, child)?;
            Ok(child)
        }
    }
}
