//! Maps between posets and the p-morphism check.

use super::{FrameError, Poset};

/// A total assignment from the elements of one poset to another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetMap {
    pub source: Poset,
    pub target: Poset,
    /// `map[i]` is the target index of source element `i`.
    pub map: Vec<usize>,
}

impl PosetMap {
    pub fn new(source: Poset, target: Poset, map: Vec<usize>) -> Result<PosetMap, FrameError> {
        if map.len() != source.len() {
            return Err(FrameError::NotTotal {
                want: source.len(),
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= target.len()) {
            return Err(FrameError::IndexOutOfRange(bad));
        }
        Ok(PosetMap { source, target, map })
    }

    /// Builds a map from name pairs.
    pub fn from_names(
        source: Poset,
        target: Poset,
        assignment: &[(&str, &str)],
    ) -> Result<PosetMap, FrameError> {
        let mut map = vec![usize::MAX; source.len()];
        for (s, t) in assignment {
            map[source.index_of(s)?] = target.index_of(t)?;
        }
        if map.contains(&usize::MAX) {
            return Err(FrameError::NotTotal {
                want: source.len(),
                got: assignment.len(),
            });
        }
        PosetMap::new(source, target, map)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &t in &self.map {
            hit[t] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// `g ∘ self`, defined when `self.target` and `g.source` agree.
    pub fn compose(&self, g: &PosetMap) -> Result<PosetMap, FrameError> {
        assert_eq!(
            self.target, g.source,
            "composition requires matching middle poset"
        );
        let map = self.map.iter().map(|&t| g.map[t]).collect();
        PosetMap::new(self.source.clone(), g.target.clone(), map)
    }
}

/// Why a map fails to be a p-morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PMorphismViolation {
    /// `x < y` in the source but `f(x) ≰ f(y)`.
    NotMonotone { x: usize, y: usize },
    /// `target ≥ f(x)` has no preimage above `x`.
    BackConditionFailed { x: usize, target: usize },
}

impl std::fmt::Display for PMorphismViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PMorphismViolation::NotMonotone { x, y } => {
                write!(f, "not monotone on the pair ({x}, {y})")
            }
            PMorphismViolation::BackConditionFailed { x, target } => {
                write!(f, "back condition fails at {x} for target {target}")
            }
        }
    }
}

/// Checks `f(↑x) = ↑f(x)` for every `x`: monotonicity gives the left-to-right
/// inclusion, the back condition the converse. Returns the first offending
/// pair on failure.
pub fn is_p_morphism(f: &PosetMap) -> Result<(), PMorphismViolation> {
    let src = &f.source;
    let tgt = &f.target;
    for x in 0..src.len() {
        for y in src.strict_up(x).iter() {
            if !tgt.leq(f.map[x], f.map[y]) {
                return Err(PMorphismViolation::NotMonotone { x, y });
            }
        }
        for target in tgt.strict_up(f.map[x]).iter() {
            let covered = src.up_of(x).iter().any(|y| f.map[y] == target);
            if !covered {
                return Err(PMorphismViolation::BackConditionFailed { x, target });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_a_p_morphism() {
        let p = Poset::from_names(
            &["bot", "u1", "u2", "v1"],
            &[("bot", "u1"), ("u1", "u2"), ("bot", "v1")],
        )
        .unwrap();
        let id = PosetMap::new(p.clone(), p, (0..4).collect()).unwrap();
        assert_eq!(is_p_morphism(&id), Ok(()));
        assert!(id.is_surjective());
    }

    #[test]
    fn constant_map_to_the_root_fails_the_back_condition() {
        // f(↑root) = {root} but ↑f(root) is the whole chain.
        let p = Poset::from_names(&["r", "t"], &[("r", "t")]).unwrap();
        let c = PosetMap::new(p.clone(), p.clone(), vec![0, 0]).unwrap();
        let r = p.index_of("r").unwrap();
        let t = p.index_of("t").unwrap();
        assert_eq!(
            is_p_morphism(&c),
            Err(PMorphismViolation::BackConditionFailed { x: r, target: t })
        );
    }

    #[test]
    fn constant_map_to_the_top_is_a_p_morphism() {
        let p = Poset::from_names(&["r", "t"], &[("r", "t")]).unwrap();
        let c = PosetMap::new(p.clone(), p, vec![1, 1]).unwrap();
        assert_eq!(is_p_morphism(&c), Ok(()));
        assert!(!c.is_surjective());
    }

    #[test]
    fn non_monotone_map_is_reported() {
        let p = Poset::from_names(&["r", "t"], &[("r", "t")]).unwrap();
        let swap = PosetMap::new(p.clone(), p, vec![1, 0]).unwrap();
        assert_eq!(
            is_p_morphism(&swap),
            Err(PMorphismViolation::NotMonotone { x: 0, y: 1 })
        );
    }
}
