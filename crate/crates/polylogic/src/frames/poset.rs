//! Finite posets with named elements, stored as Hasse diagrams.

use std::collections::BTreeMap;

use crate::bits::Bits;

use super::FrameError;

/// A finite strict partial order with named elements; the Kripke frame.
///
/// Construction accepts any acyclic set of order pairs (redundant pairs are
/// fine), takes the reflexive-transitive closure, and stores the transitive
/// reduction as the cover relation. Heights, depths and the full order are
/// precomputed; values are immutable afterwards.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    /// `up[i]` = `{j : i <= j}`, including `i`.
    up: Vec<Bits>,
    /// `down[i]` = `{j : j <= i}`, including `i`.
    down: Vec<Bits>,
    covers: Vec<(usize, usize)>,
    heights: Vec<usize>,
    depths: Vec<usize>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset{{")?;
        for (k, (a, b)) in self.covers.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}<{}", self.names[*a], self.names[*b])?;
        }
        let isolated: Vec<_> = (0..self.len())
            .filter(|&i| self.covers.iter().all(|&(a, b)| a != i && b != i))
            .map(|i| self.names[i].as_str())
            .collect();
        if !isolated.is_empty() {
            if !self.covers.is_empty() {
                write!(f, "; ")?;
            }
            write!(f, "{}", isolated.join(", "))?;
        }
        write!(f, "}}")
    }
}

impl Poset {
    /// Builds a poset from element names and strict order pairs `(a, b)`
    /// meaning `a < b`. Pairs may be redundant; cycles are rejected.
    pub fn new(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset, FrameError> {
        let n = names.len();
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(FrameError::EmptyName);
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(FrameError::DuplicateElement(name.clone()));
            }
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(FrameError::IndexOutOfRange(a.max(b)));
            }
        }

        // Strict successors, then transitive closure by DFS from each node.
        let mut succ = vec![Bits::empty(n); n];
        for &(a, b) in pairs {
            if a != b {
                succ[a].insert(b);
            } else {
                return Err(FrameError::Cycle(names[a].clone()));
            }
        }
        let mut strict_up = vec![Bits::empty(n); n];
        for start in 0..n {
            let mut stack: Vec<usize> = succ[start].to_vec();
            let mut seen = Bits::empty(n);
            while let Some(x) = stack.pop() {
                if seen.contains(x) {
                    continue;
                }
                seen.insert(x);
                stack.extend(succ[x].iter());
            }
            strict_up[start] = seen;
        }
        for i in 0..n {
            if strict_up[i].contains(i) {
                return Err(FrameError::Cycle(names[i].clone()));
            }
        }

        let mut up = strict_up.clone();
        for (i, u) in up.iter_mut().enumerate() {
            u.insert(i);
        }
        let mut down = vec![Bits::empty(n); n];
        for i in 0..n {
            for j in up[i].iter() {
                down[j].insert(i);
            }
        }

        // Hasse diagram: a < b with nothing strictly between.
        let mut covers = Vec::new();
        for a in 0..n {
            for b in strict_up[a].iter() {
                let between = strict_up[a].intersection(&down[b]);
                if between.count() == 1 {
                    // only b itself
                    covers.push((a, b));
                }
            }
        }
        covers.sort();

        let heights = longest_paths(n, &covers, false);
        let depths = longest_paths(n, &covers, true);

        Ok(Poset {
            names,
            index,
            up,
            down,
            covers,
            heights,
            depths,
        })
    }

    /// Convenience constructor over string names.
    pub fn from_names(names: &[&str], pairs: &[(&str, &str)]) -> Result<Poset, FrameError> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let mut index = BTreeMap::new();
        for (i, n) in owned.iter().enumerate() {
            index.insert(n.clone(), i);
        }
        let mut idx_pairs = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let ia = *index
                .get(*a)
                .ok_or_else(|| FrameError::UnknownElement(a.to_string()))?;
            let ib = *index
                .get(*b)
                .ok_or_else(|| FrameError::UnknownElement(b.to_string()))?;
            idx_pairs.push((ia, ib));
        }
        Poset::new(owned, &idx_pairs)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, FrameError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| FrameError::UnknownElement(name.to_owned()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// `↑x` including `x`.
    pub fn up_of(&self, x: usize) -> &Bits {
        &self.up[x]
    }

    /// `↓x` including `x`.
    pub fn down_of(&self, x: usize) -> &Bits {
        &self.down[x]
    }

    /// `⇑x`, the strict upset.
    pub fn strict_up(&self, x: usize) -> Bits {
        let mut b = self.up[x].clone();
        b.remove(x);
        b
    }

    /// `⇓x`, the strict downset.
    pub fn strict_down(&self, x: usize) -> Bits {
        let mut b = self.down[x].clone();
        b.remove(x);
        b
    }

    /// `↑S = ⋃ ↑x` over `x ∈ S`.
    pub fn upset(&self, s: &Bits) -> Bits {
        let mut out = Bits::empty(self.len());
        for x in s.iter() {
            out.union_with(&self.up[x]);
        }
        out
    }

    /// `↓S = ⋃ ↓x` over `x ∈ S`.
    pub fn downset(&self, s: &Bits) -> Bits {
        let mut out = Bits::empty(self.len());
        for x in s.iter() {
            out.union_with(&self.down[x]);
        }
        out
    }

    pub fn is_upward_closed(&self, s: &Bits) -> bool {
        self.upset(s) == *s
    }

    /// Longest-chain length minus one; errors on the empty poset.
    pub fn height(&self) -> Result<usize, FrameError> {
        self.heights.iter().max().copied().ok_or(FrameError::Empty)
    }

    /// `height(↓x)`.
    pub fn height_of(&self, x: usize) -> usize {
        self.heights[x]
    }

    /// `height(↑x)`.
    pub fn depth_of(&self, x: usize) -> usize {
        self.depths[x]
    }

    /// Cover pairs `(a, b)` with `b` an immediate successor of `a`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn immediate_successors(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(a, _)| a == x)
            .map(|&(_, b)| b)
            .collect()
    }

    pub fn immediate_predecessors(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, b)| b == x)
            .map(|&(a, _)| a)
            .collect()
    }

    /// Depth-0 elements, ascending.
    pub fn tops(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.depths[x] == 0).collect()
    }

    pub fn maximal_in(&self, s: &Bits) -> Vec<usize> {
        s.iter()
            .filter(|&x| self.strict_up(x).is_disjoint(s))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.strict_down(x).is_empty())
            .collect()
    }

    /// The minimum element, if there is one.
    pub fn root(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.up[x].count() == self.len())
    }

    pub fn is_rooted(&self) -> bool {
        self.root().is_some()
    }

    /// Partition of `s` into zigzag-connected components (comparability edges
    /// restricted to `s`). Components and their members are sorted.
    pub fn connected_components(&self, s: &Bits) -> Vec<Vec<usize>> {
        let mut seen = Bits::empty(self.len());
        let mut out = Vec::new();
        for start in s.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(x) = stack.pop() {
                comp.push(x);
                let mut neigh = self.up[x].union(&self.down[x]);
                neigh.intersect_with(s);
                for y in neigh.iter() {
                    if !seen.contains(y) {
                        seen.insert(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Induced subposet on `keep`; returns it with the map back to original
    /// indices (position `i` of the new poset is element `kept[i]` here).
    pub fn restrict(&self, keep: &Bits) -> (Poset, Vec<usize>) {
        let kept = keep.to_vec();
        let pos: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let names = kept.iter().map(|&x| self.names[x].clone()).collect();
        let mut pairs = Vec::new();
        for (i, &x) in kept.iter().enumerate() {
            for y in self.strict_up(x).iter() {
                if let Some(&j) = pos.get(&y) {
                    pairs.push((i, j));
                }
            }
        }
        let sub = Poset::new(names, &pairs).expect("induced order is a poset");
        (sub, kept)
    }

    /// All upward-closed subsets, sorted; refuses if there are more than `cap`.
    pub fn all_upsets(&self, cap: usize) -> Result<Vec<Bits>, FrameError> {
        let n = self.len();
        // Decide membership top-down so the closure constraint only looks at
        // already-decided elements.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (self.depths[x], x));
        let mut out = Vec::new();
        let mut current = Bits::empty(n);
        self.enumerate_upsets(&order, 0, &mut current, &mut out, cap)?;
        out.sort();
        Ok(out)
    }

    fn enumerate_upsets(
        &self,
        order: &[usize],
        k: usize,
        current: &mut Bits,
        out: &mut Vec<Bits>,
        cap: usize,
    ) -> Result<(), FrameError> {
        if k == order.len() {
            if out.len() >= cap {
                return Err(FrameError::CarrierCapExceeded { cap });
            }
            out.push(current.clone());
            return Ok(());
        }
        let x = order[k];
        // Exclude x.
        self.enumerate_upsets(order, k + 1, current, out, cap)?;
        // Include x if all strict successors are already in.
        if self.strict_up(x).is_subset(current) {
            current.insert(x);
            self.enumerate_upsets(order, k + 1, current, out, cap)?;
            current.remove(x);
        }
        Ok(())
    }

    /// All nonempty chains, each sorted ascending by element index.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for start in 0..self.len() {
            self.extend_chain(&mut vec![start], &mut out);
        }
        out
    }

    fn extend_chain(&self, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let mut sorted = chain.clone();
        sorted.sort();
        out.push(sorted);
        let top = *chain.last().unwrap();
        for next in self.strict_up(top).iter() {
            chain.push(next);
            self.extend_chain(chain, out);
            chain.pop();
        }
    }

    /// Bit-set from element names.
    pub fn set_of(&self, names: &[&str]) -> Result<Bits, FrameError> {
        let mut b = Bits::empty(self.len());
        for n in names {
            b.insert(self.index_of(n)?);
        }
        Ok(b)
    }

    pub fn set_names(&self, s: &Bits) -> Vec<String> {
        s.iter().map(|i| self.names[i].clone()).collect()
    }
}

/// Longest path lengths over the cover DAG; `reverse` measures from the top.
fn longest_paths(n: usize, covers: &[(usize, usize)], reverse: bool) -> Vec<usize> {
    let mut adj_in: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in covers {
        let (src, dst) = if reverse { (b, a) } else { (a, b) };
        adj_in[dst].push(src);
    }
    // Elements in dependency order: repeatedly settle nodes whose inputs are done.
    let mut value = vec![usize::MAX; n];
    let mut remaining = n;
    while remaining > 0 {
        let mut progressed = false;
        for x in 0..n {
            if value[x] != usize::MAX {
                continue;
            }
            if adj_in[x].iter().all(|&p| value[p] != usize::MAX) {
                value[x] = adj_in[x].iter().map(|&p| value[p] + 1).max().unwrap_or(0);
                remaining -= 1;
                progressed = true;
            }
        }
        assert!(progressed || remaining == 0, "cover relation has a cycle");
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scott() -> Poset {
        Poset::from_names(
            &["bot", "u1", "u2", "v1"],
            &[("bot", "u1"), ("u1", "u2"), ("bot", "v1")],
        )
        .unwrap()
    }

    #[test]
    fn two_chain_upsets() {
        let p = Poset::from_names(&["r", "t"], &[("r", "t")]).unwrap();
        let r = p.index_of("r").unwrap();
        let t = p.index_of("t").unwrap();
        assert_eq!(p.upset(&Bits::singleton(2, r)).to_vec(), vec![r, t]);
        assert_eq!(p.upset(&Bits::singleton(2, t)).to_vec(), vec![t]);
    }

    #[test]
    fn scott_downset_of_u2() {
        // Transitive closure by hand: bot < u1 < u2.
        let p = scott();
        let u2 = p.index_of("u2").unwrap();
        assert_eq!(
            p.set_names(&p.downset(&Bits::singleton(4, u2))),
            vec!["bot", "u1", "u2"]
        );
    }

    #[test]
    fn heights_and_depths() {
        let p = Poset::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(p.height().unwrap(), 2);

        let p = scott();
        assert_eq!(p.height().unwrap(), 2);
        assert_eq!(p.depth_of(p.index_of("bot").unwrap()), 2);
        assert_eq!(p.depth_of(p.index_of("v1").unwrap()), 0);
        assert_eq!(p.height_of(p.index_of("u2").unwrap()), 2);
    }

    #[test]
    fn height_matches_exhaustive_chain_enumeration() {
        // Oracle: maximum over all chains of (length - 1).
        let cases = [
            Poset::from_names(
                &["a", "b", "c", "d", "e"],
                &[("a", "b"), ("a", "c"), ("c", "d"), ("b", "d"), ("d", "e")],
            )
            .unwrap(),
            scott(),
            Poset::from_names(&["x", "y", "z"], &[]).unwrap(),
        ];
        for p in cases {
            let oracle = p
                .chains()
                .iter()
                .map(|c| c.len() - 1)
                .max()
                .unwrap();
            assert_eq!(p.height().unwrap(), oracle);
        }
    }

    #[test]
    fn redundant_pairs_reduce_to_covers() {
        let p = Poset::from_names(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("a", "c")], // (a,c) is implied
        )
        .unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2));
    }

    #[test]
    fn cycles_are_rejected() {
        let err = Poset::from_names(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, FrameError::Cycle(_)));
    }

    #[test]
    fn components_of_strict_upsets() {
        // Three-fork: the strict upset of the root has three singleton components.
        let fork = Poset::from_names(
            &["r", "t1", "t2", "t3"],
            &[("r", "t1"), ("r", "t2"), ("r", "t3")],
        )
        .unwrap();
        let comps = fork.connected_components(&fork.strict_up(0));
        assert_eq!(comps.len(), 3);

        // Scott frame: {u1,u2} and {v1}.
        let p = scott();
        let comps = p.connected_components(&p.strict_up(p.index_of("bot").unwrap()));
        assert_eq!(comps.len(), 2);
        assert_eq!(p.set_names(&Bits::from_indices(4, comps[0].iter().copied())), vec!["u1", "u2"]);

        // Any connected poset has one component.
        let chain = Poset::from_names(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(chain.connected_components(&Bits::full(2)).len(), 1);
    }

    #[test]
    fn upset_enumeration_counts() {
        let point = Poset::from_names(&["x"], &[]).unwrap();
        assert_eq!(point.all_upsets(1024).unwrap().len(), 2);

        let chain = Poset::from_names(&["r", "t"], &[("r", "t")]).unwrap();
        let ups = chain.all_upsets(1024).unwrap();
        assert_eq!(ups.len(), 3);

        let anti = Poset::from_names(&["a", "b"], &[]).unwrap();
        assert_eq!(anti.all_upsets(1024).unwrap().len(), 4);

        let err = anti.all_upsets(3).unwrap_err();
        assert!(matches!(err, FrameError::CarrierCapExceeded { cap: 3 }));
    }

    #[test]
    fn restriction_keeps_names_and_order() {
        let p = scott();
        let keep = p.set_of(&["u1", "u2", "v1"]).unwrap();
        let (sub, back) = p.restrict(&keep);
        assert_eq!(sub.len(), 3);
        assert_eq!(back.len(), 3);
        let u1 = sub.index_of("u1").unwrap();
        let u2 = sub.index_of("u2").unwrap();
        let v1 = sub.index_of("v1").unwrap();
        assert!(sub.lt(u1, u2));
        assert!(!sub.leq(u1, v1) && !sub.leq(v1, u1));
    }

    #[test]
    fn chains_of_a_small_poset() {
        let p = Poset::from_names(&["a", "b"], &[("a", "b")]).unwrap();
        let mut chains = p.chains();
        chains.sort();
        assert_eq!(chains, vec![vec![0], vec![0, 1], vec![1]]);
    }
}
