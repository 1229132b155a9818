//! Backtracking search for up-reductions: surjective p-morphisms from an
//! upward-closed subframe onto a target frame.

use crate::bits::Bits;

use super::{is_p_morphism, PosetMap, Poset};

/// A found up-reduction. `map.source` is the induced subposet on `domain`
/// (original indices, ascending), and `map` is a surjective p-morphism onto
/// the target.
#[derive(Clone, Debug)]
pub struct UpReduction {
    pub domain: Vec<usize>,
    pub map: PosetMap,
}

// Safety valve for the domain enumeration; inputs in scope stay far below it.
const DOMAIN_CAP: usize = 1 << 22;

/// Searches for an up-reduction from `p` to `q`.
///
/// Candidate domains are all upward-closed subsets of `p`, visited largest
/// first (ties in ascending set order). Inside a domain, elements are assigned
/// in order of decreasing height (ties by name) so that when `x` is assigned
/// its whole strict upset already has values, which makes `f(↑x) = ↑f(x)`
/// checkable on the spot. Candidate targets are tried in name order. Branches
/// are cut when monotonicity, the back condition, or surjectivity can no
/// longer be met. The first solution in this fixed order is returned, so the
/// result depends only on the element ordering.
pub fn find_up_reduction(p: &Poset, q: &Poset) -> Option<UpReduction> {
    if q.is_empty() {
        let (sub, _) = p.restrict(&Bits::empty(p.len()));
        let map = PosetMap::new(sub, q.clone(), Vec::new()).expect("empty map");
        return Some(UpReduction {
            domain: Vec::new(),
            map,
        });
    }

    let mut domains = p
        .all_upsets(DOMAIN_CAP)
        .expect("domain enumeration exceeded the internal cap");
    domains.sort_by(|a, b| b.count().cmp(&a.count()).then(a.cmp(b)));

    let q_height = q.height().ok()?;
    let mut target_order: Vec<usize> = (0..q.len()).collect();
    target_order.sort_by(|&a, &b| q.name(a).cmp(q.name(b)));

    for domain in domains {
        if domain.count() < q.len() {
            continue;
        }
        if domain_height(p, &domain) < q_height {
            continue;
        }
        let mut order: Vec<usize> = domain.to_vec();
        order.sort_by(|&a, &b| {
            p.height_of(b)
                .cmp(&p.height_of(a))
                .then_with(|| p.name(a).cmp(p.name(b)))
        });
        let mut assignment = vec![usize::MAX; p.len()];
        if assign(p, q, &order, &target_order, 0, &mut assignment) {
            let (sub, kept) = p.restrict(&domain);
            let map_vec: Vec<usize> = kept.iter().map(|&x| assignment[x]).collect();
            let map = PosetMap::new(sub, q.clone(), map_vec).expect("total by construction");
            debug_assert_eq!(is_p_morphism(&map), Ok(()));
            debug_assert!(map.is_surjective());
            return Some(UpReduction {
                domain: kept,
                map,
            });
        }
    }
    None
}

/// Height of the induced subposet on an upward-closed `domain`.
fn domain_height(p: &Poset, domain: &Bits) -> usize {
    let mut order: Vec<usize> = domain.to_vec();
    order.sort_by_key(|&x| p.height_of(x));
    let mut h = vec![0usize; p.len()];
    let mut best = 0;
    for &x in &order {
        for y in p.strict_down(x).iter() {
            if domain.contains(y) {
                h[x] = h[x].max(h[y] + 1);
            }
        }
        best = best.max(h[x]);
    }
    best
}

fn assign(
    p: &Poset,
    q: &Poset,
    order: &[usize],
    target_order: &[usize],
    k: usize,
    assignment: &mut Vec<usize>,
) -> bool {
    if k == order.len() {
        let mut hit = vec![false; q.len()];
        for &x in order {
            hit[assignment[x]] = true;
        }
        return hit.into_iter().all(|h| h);
    }
    let x = order[k];
    'candidates: for &t in target_order {
        // (a) monotone against the already-assigned strict upset of x.
        for y in p.strict_up(x).iter() {
            if !q.leq(t, assignment[y]) {
                continue 'candidates;
            }
        }
        // (b) back condition at x is fully determined: everything above x is
        // assigned, so f(⇑x) must already cover ⇑t.
        for needed in q.strict_up(t).iter() {
            if !p.strict_up(x).iter().any(|y| assignment[y] == needed) {
                continue 'candidates;
            }
        }
        assignment[x] = t;
        // (c) surjectivity must stay reachable: every still-missing target
        // needs some unassigned element that could map to it.
        if surjectivity_reachable(p, q, order, k + 1, assignment)
            && assign(p, q, order, target_order, k + 1, assignment)
        {
            return true;
        }
        assignment[x] = usize::MAX;
    }
    false
}

fn surjectivity_reachable(
    p: &Poset,
    q: &Poset,
    order: &[usize],
    next: usize,
    assignment: &[usize],
) -> bool {
    let mut missing: Vec<usize> = (0..q.len()).collect();
    missing.retain(|&t| order[..next].iter().all(|&x| assignment[x] != t));
    if missing.len() > order.len() - next {
        return false;
    }
    'targets: for &t in &missing {
        for &u in &order[next..] {
            let ok = p
                .strict_up(u)
                .iter()
                .filter(|&y| assignment[y] != usize::MAX)
                .all(|y| q.leq(t, assignment[y]));
            if ok {
                continue 'targets;
            }
        }
        return false;
    }
    true
}
