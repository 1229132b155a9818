//! The Heyting algebra of upward-closed sets, and frame validity.

use std::collections::BTreeMap;

use crate::bits::Bits;
use crate::formula::{eval, Formula, HeytingAlgebra};

use super::{FrameError, Poset};

/// The Heyting algebra `Up F` of all upward-closed subsets of a poset.
///
/// Meets and joins are intersections and unions; the implication is
/// `impl(U, V) = {x : ↑x ∩ U ⊆ V}`, the largest upset `W` with
/// `W ∩ U ⊆ V`.
#[derive(Clone, Debug)]
pub struct UpsetAlgebra {
    poset: Poset,
    carrier: Vec<Bits>,
}

/// Enumerates the full carrier; refuses when it would exceed `cap`.
pub fn up_algebra(p: &Poset, cap: usize) -> Result<UpsetAlgebra, FrameError> {
    let carrier = p.all_upsets(cap)?;
    Ok(UpsetAlgebra {
        poset: p.clone(),
        carrier,
    })
}

impl UpsetAlgebra {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Carrier in ascending set order.
    pub fn carrier(&self) -> &[Bits] {
        &self.carrier
    }

    pub fn contains(&self, u: &Bits) -> bool {
        self.carrier.binary_search(u).is_ok()
    }

    pub fn implication(&self, u: &Bits, v: &Bits) -> Bits {
        let n = self.poset.len();
        let mut out = Bits::empty(n);
        for x in 0..n {
            if self.poset.up_of(x).intersection(u).is_subset(v) {
                out.insert(x);
            }
        }
        out
    }
}

impl HeytingAlgebra for UpsetAlgebra {
    type Elem = Bits;

    fn top(&self) -> Bits {
        Bits::full(self.poset.len())
    }

    fn bot(&self) -> Bits {
        Bits::empty(self.poset.len())
    }

    fn meet(&self, a: &Bits, b: &Bits) -> Bits {
        a.intersection(b)
    }

    fn join(&self, a: &Bits, b: &Bits) -> Bits {
        a.union(b)
    }

    fn implies(&self, a: &Bits, b: &Bits) -> Bits {
        self.implication(a, b)
    }
}

/// Outcome of checking a formula on a frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Refuted {
        /// Witness valuation, atom name to upset.
        valuation: BTreeMap<String, Bits>,
        /// An element where the formula fails.
        world: usize,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Checks `phi` on every valuation of its atoms by upsets of `p`.
///
/// Valuations range only over atoms that occur in `phi` and are enumerated in
/// ascending carrier order, first atom (alphabetically) slowest, so the first
/// refutation found is stable across runs. Returns the witness valuation and
/// the least element outside the value of `phi`.
pub fn frame_validates(p: &Poset, phi: &Formula, cap: usize) -> Result<Validity, FrameError> {
    let algebra = up_algebra(p, cap)?;
    let atoms: Vec<&str> = phi.atoms().into_iter().collect();
    let carrier = algebra.carrier();
    let top = algebra.top();

    let mut choice = vec![0usize; atoms.len()];
    loop {
        let valuation: BTreeMap<String, Bits> = atoms
            .iter()
            .zip(&choice)
            .map(|(a, &c)| (a.to_string(), carrier[c].clone()))
            .collect();
        let value = eval(phi, &algebra, &valuation).expect("all atoms are bound");
        if value != top {
            let world = value.complement().first().expect("a point refutes");
            return Ok(Validity::Refuted { valuation, world });
        }
        // Odometer step: last atom fastest.
        let mut k = atoms.len();
        loop {
            if k == 0 {
                return Ok(Validity::Valid);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < carrier.len() {
                break;
            }
            choice[k] = 0;
        }
        if atoms.is_empty() {
            return Ok(Validity::Valid);
        }
    }
}
