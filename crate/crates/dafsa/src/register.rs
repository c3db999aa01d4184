//! The register: the set of pairwise-inequivalent representative
//! states used by both builders to detect and merge equivalent states.
//!
//! Two states are equivalent iff they are both final or both non-final
//! and their outgoing transitions agree on labels and targets, given
//! that all targets are already unique class representatives. That is
//! exactly what [`Signature`] captures, so the register is a hash map
//! keyed by signature.

use std::collections::HashMap;

use crate::automaton::{Automaton, Label, StateId};
use crate::error::{Error, Result};

/// Canonical equivalence-class key of a state: final flag plus the
/// label-ordered (label, target) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    is_final: bool,
    arcs: Vec<(Label, StateId)>,
}

impl Signature {
    pub fn is_final(&self) -> bool {
        self.is_final
    }

    pub fn arcs(&self) -> &[(Label, StateId)] {
        &self.arcs
    }
}

/// Compute the signature of a live state. Signatures are never cached
/// on the state, so the only staleness hazard is mutating a state that
/// is still registered — which [`Register::remove`] rejects.
pub fn signature_of(a: &Automaton, q: StateId) -> Result<Signature> {
    Ok(Signature {
        is_final: a.is_final(q)?,
        arcs: a.transitions(q)?.to_vec(),
    })
}

/// Map from signature to the unique representative of that class.
#[derive(Debug, Default)]
pub struct Register {
    index: HashMap<Signature, StateId>,
}

impl Register {
    pub fn new() -> Self {
        Register::default()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// The representative with this signature, if any.
    pub fn lookup(&self, sig: &Signature) -> Option<StateId> {
        self.index.get(sig).copied()
    }

    /// Register `q` under its current signature.
    pub fn insert(&mut self, a: &Automaton, q: StateId) -> Result<()> {
        let sig = signature_of(a, q)?;
        if self.index.contains_key(&sig) {
            return Err(Error::DuplicateSignature);
        }
        self.index.insert(sig, q);
        Ok(())
    }

    /// Withdraw `q`, looked up under its current signature. Callers
    /// must remove a state before mutating it; after a mutation the
    /// lookup misses and this returns [`Error::NotRegistered`].
    pub fn remove(&mut self, a: &Automaton, q: StateId) -> Result<()> {
        let sig = signature_of(a, q)?;
        match self.index.get(&sig) {
            Some(&id) if id == q => {
                self.index.remove(&sig);
                Ok(())
            }
            _ => Err(Error::NotRegistered),
        }
    }

    /// Registered representatives, in no particular order. Only audits
    /// and tests should need this.
    pub fn states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.index.values().copied()
    }

    /// Rebuild a register for a finished minimal automaton by one
    /// bottom-up pass: states in increasing height order, so every
    /// signature refers only to already-inserted representatives.
    ///
    /// Fails with [`Error::NotMinimal`] if two states share a class or
    /// some state is unreachable, and with [`Error::CyclicInput`] on
    /// cyclic input.
    pub fn rebuild(a: &Automaton) -> Result<Register> {
        if !a.check_acyclic() {
            return Err(Error::CyclicInput);
        }
        if !a.check_reachable() {
            return Err(Error::NotMinimal {
                reason: "unreachable states present".into(),
            });
        }
        let mut order: Vec<(u32, StateId)> = a
            .live_states()
            .map(|q| (height(a, q), q))
            .collect();
        order.sort(); // height, then slot index: deterministic
        let mut reg = Register::new();
        for (_, q) in order {
            if q == a.start() {
                continue;
            }
            reg.insert(a, q).map_err(|e| match e {
                Error::DuplicateSignature => Error::NotMinimal {
                    reason: "two states share an equivalence class".into(),
                },
                other => other,
            })?;
        }
        Ok(reg)
    }
}

fn height(a: &Automaton, q: StateId) -> u32 {
    // Iterative post-order; memoized by slot index.
    let mut memo: HashMap<StateId, u32> = HashMap::new();
    let mut stack = vec![(q, false)];
    while let Some((s, expanded)) = stack.pop() {
        if memo.contains_key(&s) {
            continue;
        }
        let arcs = a.transitions(s).expect("live state");
        if expanded {
            let h = arcs
                .iter()
                .map(|(_, t)| memo[t] + 1)
                .max()
                .unwrap_or(0);
            memo.insert(s, h);
        } else {
            stack.push((s, true));
            for &(_, t) in arcs {
                if !memo.contains_key(&t) {
                    stack.push((t, false));
                }
            }
        }
    }
    memo[&q]
}
