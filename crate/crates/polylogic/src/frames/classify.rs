//! Frame classification: bounded depth, the polytope logic, and Jankov-Fine
//! validity decided through up-reductions.

use super::{find_up_reduction, FrameError, Poset};

/// Bounded depth: the frame has height at most `n`.
pub fn satisfies_bd(p: &Poset, n: usize) -> bool {
    p.height().map(|h| h <= n).unwrap_or(true)
}

/// The structural reading of the polytope logic on a poset:
///
/// 1. height at most `n` (skipped when `n` is `None`),
/// 2. every element of depth 1 has at most two elements strictly above it,
/// 3. every element of depth greater than 1 has a connected strict upset.
///
/// A failure carries the violated clause and a witness element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlCheck {
    Pass,
    Fail(PlViolation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlViolation {
    pub clause: PlClause,
    pub witness: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlClause {
    /// Height exceeds the bound; the witness is a maximal-height element.
    Height,
    /// A depth-1 element has more than two elements strictly above it.
    TopWidth,
    /// A depth->1 element has a disconnected strict upset.
    Disconnected,
}

impl PlCheck {
    pub fn is_pass(&self) -> bool {
        matches!(self, PlCheck::Pass)
    }
}

impl std::fmt::Display for PlViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.clause {
            PlClause::Height => write!(f, "height bound exceeded at element {}", self.witness),
            PlClause::TopWidth => write!(
                f,
                "element {} has depth 1 but more than two elements above it",
                self.witness
            ),
            PlClause::Disconnected => write!(
                f,
                "element {} has a disconnected strict upset",
                self.witness
            ),
        }
    }
}

/// Checks the polytope-logic clauses; `n = None` drops the height bound.
pub fn satisfies_pl(p: &Poset, n: Option<usize>) -> PlCheck {
    if let Some(bound) = n {
        if let Ok(h) = p.height() {
            if h > bound {
                let witness = (0..p.len()).find(|&x| p.height_of(x) == h).unwrap();
                return PlCheck::Fail(PlViolation {
                    clause: PlClause::Height,
                    witness,
                });
            }
        }
    }
    for x in 0..p.len() {
        let depth = p.depth_of(x);
        if depth == 1 {
            if p.strict_up(x).count() > 2 {
                return PlCheck::Fail(PlViolation {
                    clause: PlClause::TopWidth,
                    witness: x,
                });
            }
        } else if depth > 1 {
            let up = p.strict_up(x);
            if p.connected_components(&up).len() > 1 {
                return PlCheck::Fail(PlViolation {
                    clause: PlClause::Disconnected,
                    witness: x,
                });
            }
        }
    }
    PlCheck::Pass
}

/// `true` iff no up-reduction from `p` to `q` exists. `q` must be rooted.
pub fn validates_jankov_fine(p: &Poset, q: &Poset) -> Result<bool, FrameError> {
    if !q.is_rooted() {
        return Err(FrameError::NotRooted);
    }
    Ok(find_up_reduction(p, q).is_none())
}

/// Named frames used throughout: `point`, `k-fork` (`k >= 1`), `k-chain`
/// (`k >= 1` elements), `two_fork`, `three_fork` and `scott`.
///
/// The two axiomatizing frames are fixed as follows. `three_fork` is a root
/// with three pairwise-incomparable maximal points, so its root sees three
/// one-point components above it. `scott` is `bot < u1 < u2` together with
/// `bot < v1`, so the root sees two components, one of height 1. These shapes
/// are exactly what the two forbidden-configuration checks in
/// [`satisfies_pl`] detect.
pub fn builtin_frame(name: &str) -> Result<Poset, FrameError> {
    match name {
        "point" => return Poset::from_names(&["x"], &[]),
        "scott" => {
            return Poset::from_names(
                &["bot", "u1", "u2", "v1"],
                &[("bot", "u1"), ("u1", "u2"), ("bot", "v1")],
            )
        }
        "two_fork" => return builtin_frame("2-fork"),
        "three_fork" => return builtin_frame("3-fork"),
        _ => {}
    }
    if let Some(k) = name.strip_suffix("-fork").and_then(|s| s.parse::<usize>().ok()) {
        if k >= 1 {
            let mut names = vec!["r".to_owned()];
            names.extend((1..=k).map(|i| format!("t{i}")));
            let pairs: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
            return Poset::new(names, &pairs);
        }
    }
    if let Some(k) = name.strip_suffix("-chain").and_then(|s| s.parse::<usize>().ok()) {
        if k >= 1 {
            let names: Vec<String> = (1..=k).map(|i| format!("c{i}")).collect();
            let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
            return Poset::new(names, &pairs);
        }
    }
    Err(FrameError::UnknownBuiltin(name.to_owned()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        let fork = builtin_frame("three_fork").unwrap();
        assert_eq!(fork.len(), 4);
        assert_eq!(fork.height().unwrap(), 1);

        let scott = builtin_frame("scott").unwrap();
        assert_eq!(scott.len(), 4);
        assert_eq!(scott.height().unwrap(), 2);

        let two = builtin_frame("two_fork").unwrap();
        assert_eq!(two.len(), 3);

        assert!(builtin_frame("0-fork").is_err());
        assert!(builtin_frame("pentagon").is_err());
        assert_eq!(builtin_frame("4-chain").unwrap().height().unwrap(), 3);
    }

    #[test]
    fn bd_is_the_height_criterion() {
        let chain = builtin_frame("3-chain").unwrap();
        assert!(satisfies_bd(&chain, 2));
        assert!(!satisfies_bd(&chain, 1));
        assert!(satisfies_bd(&builtin_frame("point").unwrap(), 0));
    }

    #[test]
    fn scott_fails_the_connectedness_clause_at_the_root() {
        let scott = builtin_frame("scott").unwrap();
        let bot = scott.index_of("bot").unwrap();
        assert_eq!(
            satisfies_pl(&scott, Some(2)),
            PlCheck::Fail(PlViolation {
                clause: PlClause::Disconnected,
                witness: bot,
            })
        );
    }

    #[test]
    fn three_fork_fails_the_width_clause_at_the_root() {
        let fork = builtin_frame("three_fork").unwrap();
        let r = fork.index_of("r").unwrap();
        assert_eq!(
            satisfies_pl(&fork, Some(1)),
            PlCheck::Fail(PlViolation {
                clause: PlClause::TopWidth,
                witness: r,
            })
        );
    }

    #[test]
    fn two_fork_passes() {
        let two = builtin_frame("two_fork").unwrap();
        assert!(satisfies_pl(&two, Some(1)).is_pass());
        assert!(satisfies_pl(&two, None).is_pass());
    }

    #[test]
    fn jankov_fine_through_up_reductions() {
        let two_chain = builtin_frame("2-chain").unwrap();
        let fork3 = builtin_frame("three_fork").unwrap();
        let scott = builtin_frame("scott").unwrap();
        // No point of the 2-chain has a three-component strict upset.
        assert!(validates_jankov_fine(&two_chain, &fork3).unwrap());
        // Identity up-reductions refute.
        assert!(!validates_jankov_fine(&scott, &scott).unwrap());
        assert!(!validates_jankov_fine(&fork3, &fork3).unwrap());
        // Target must be rooted.
        let anti = Poset::from_names(&["a", "b"], &[]).unwrap();
        assert!(matches!(
            validates_jankov_fine(&two_chain, &anti),
            Err(FrameError::NotRooted)
        ));
    }
}
