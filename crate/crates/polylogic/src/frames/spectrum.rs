//! Prime filter spectra of upset algebras.
//!
//! In a finite lattice every filter is the principal upset of its minimum, so
//! filters are enumerated through their generators; primality is checked from
//! the definition. The canonical embedding `x ↦ {U : x ∈ U}` exhibits the
//! base poset inside the spectrum of its upset algebra.

use crate::bits::Bits;

use super::{FrameError, PosetMap, Poset, UpsetAlgebra};

/// The spectrum poset plus, for each element, the filter it names as a sorted
/// list of carrier indices.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub poset: Poset,
    pub filters: Vec<Vec<usize>>,
}

/// Poset of prime filters of the algebra under inclusion.
pub fn prime_filter_spectrum(alg: &UpsetAlgebra) -> Spectrum {
    let carrier = alg.carrier();
    let bot_pos = carrier
        .binary_search(&Bits::empty(alg.poset().len()))
        .expect("the empty upset is in the carrier");

    let mut filters: Vec<Vec<usize>> = Vec::new();
    for (m, gen) in carrier.iter().enumerate() {
        if m == bot_pos {
            continue; // proper filters exclude the bottom
        }
        // ↑gen is prime iff gen ≤ a ∨ b forces gen ≤ a or gen ≤ b.
        let prime = carrier.iter().all(|a| {
            carrier.iter().all(|b| {
                !gen.is_subset(&a.union(b)) || gen.is_subset(a) || gen.is_subset(b)
            })
        });
        if prime {
            let filter: Vec<usize> = carrier
                .iter()
                .enumerate()
                .filter(|(_, u)| gen.is_subset(u))
                .map(|(i, _)| i)
                .collect();
            filters.push(filter);
        }
    }

    let names: Vec<String> = (0..filters.len()).map(|i| format!("F{i}")).collect();
    let mut pairs = Vec::new();
    for (i, fi) in filters.iter().enumerate() {
        for (j, fj) in filters.iter().enumerate() {
            if i != j && fi.iter().all(|u| fj.binary_search(u).is_ok()) {
                pairs.push((i, j));
            }
        }
    }
    let poset = Poset::new(names, &pairs).expect("inclusion is a partial order");
    Spectrum { poset, filters }
}

/// The canonical map `x ↦ {U : x ∈ U}` from the base poset into the spectrum.
/// Errors if some image set is not an element of the spectrum.
pub fn canonical_embedding(alg: &UpsetAlgebra, spec: &Spectrum) -> Result<PosetMap, FrameError> {
    let base = alg.poset();
    let carrier = alg.carrier();
    let mut map = Vec::with_capacity(base.len());
    for x in 0..base.len() {
        let image: Vec<usize> = carrier
            .iter()
            .enumerate()
            .filter(|(_, u)| u.contains(x))
            .map(|(i, _)| i)
            .collect();
        let pos = spec
            .filters
            .iter()
            .position(|f| *f == image)
            .ok_or_else(|| FrameError::UnknownElement(base.name(x).to_owned()))?;
        map.push(pos);
    }
    PosetMap::new(base.clone(), spec.poset.clone(), map)
}

/// Whether `f` is an order isomorphism: a bijection with
/// `x ≤ y ⇔ f(x) ≤ f(y)`.
pub fn is_order_isomorphism(f: &PosetMap) -> bool {
    if f.source.len() != f.target.len() || !f.is_surjective() {
        return false;
    }
    for x in 0..f.source.len() {
        for y in 0..f.source.len() {
            if f.source.leq(x, y) != f.target.leq(f.map[x], f.map[y]) {
                return false;
            }
        }
    }
    true
}
