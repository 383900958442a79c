//! Exact pattern-choice balancing for corona levels without a closed-form
//! assignment.
//!
//! One corona level attaches a copy of `H` to every vertex of the current
//! product. When the per-copy color counts are only constrained to a small
//! menu of patterns (count vectors avoiding the owner color), reaching an
//! equitable total is a reachability question over running class-size
//! differences. The differences stay inside a narrow band for any assignment
//! worth keeping, so a forward DP over normalized difference vectors is exact
//! and fast; parents are recorded for reconstruction. Iteration order is
//! fixed (BTreeMap + fixed pattern order), so the chosen assignment is
//! deterministic.

use std::collections::BTreeMap;

/// Picks one pattern per copy so the final class sizes differ by at most one,
/// or reports that the menu cannot achieve it within the band.
///
/// `base` holds the class sizes already fixed (the owners). `owner_colors`
/// lists each copy's owner color in dense order; `menu(c)` enumerates the
/// candidate per-class count vectors for a copy whose owner has color `c`.
/// Returns the chosen menu index per copy.
pub(crate) fn balance_copies(
    base: &[u64],
    owner_colors: &[usize],
    menu: &dyn Fn(usize) -> Vec<Vec<u64>>,
    band: u64,
) -> Option<Vec<usize>> {
    type State = Vec<u64>;
    let normalize = |mut v: State| -> State {
        let min = *v.iter().min().expect("at least one class");
        for x in &mut v {
            *x -= min;
        }
        v
    };

    let start = normalize(base.to_vec());
    if start.iter().any(|&d| d > band) {
        return None;
    }
    // layers[i] maps states reachable after i copies to (parent state, menu index).
    let mut layers: Vec<BTreeMap<State, (State, usize)>> = Vec::with_capacity(owner_colors.len());
    let mut current: Vec<State> = vec![start.clone()];
    for &oc in owner_colors {
        let patterns = menu(oc);
        let mut next: BTreeMap<State, (State, usize)> = BTreeMap::new();
        for state in &current {
            for (pi, pat) in patterns.iter().enumerate() {
                let mut ns = state.clone();
                for (x, p) in ns.iter_mut().zip(pat) {
                    *x += p;
                }
                let ns = normalize(ns);
                if ns.iter().any(|&d| d > band) {
                    continue;
                }
                next.entry(ns).or_insert_with(|| (state.clone(), pi));
            }
        }
        if next.is_empty() {
            return None;
        }
        current = next.keys().cloned().collect();
        layers.push(next);
    }

    // Smallest equitable final state; BTreeMap order makes the pick stable.
    let last = layers.last()?;
    let mut target: Option<State> = None;
    for state in last.keys() {
        if *state.iter().max().unwrap() <= 1 {
            target = Some(state.clone());
            break;
        }
    }
    let mut state = target?;
    let mut choices = vec![0usize; owner_colors.len()];
    for i in (0..owner_colors.len()).rev() {
        let (parent, pi) = layers[i].get(&state).expect("backpointer exists").clone();
        choices[i] = pi;
        state = parent;
    }
    Some(choices)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn balances_a_two_copy_instance() {
        // Owners colored 1 and 2 with one vertex each; copies are C6 halves
        // (k = 3): permutations of (3, 2, 1) over the non-owner colors.
        let menu = |oc: usize| -> Vec<Vec<u64>> {
            let others: Vec<usize> = (1..=4).filter(|&c| c != oc).collect();
            let mut out = Vec::new();
            let vals = [3u64, 2, 1];
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            for p in perms {
                let mut v = vec![0u64; 4];
                for (slot, &vi) in p.iter().enumerate() {
                    v[others[slot] - 1] = vals[vi];
                }
                out.push(v);
            }
            out
        };
        let choices = balance_copies(&[1, 1, 0, 0], &[1, 2], &menu, 20).unwrap();
        assert_eq!(choices.len(), 2);
        // Recompute the final sizes from the choices.
        let mut sizes = [1u64, 1, 0, 0];
        for (copy, &ci) in [1usize, 2].iter().zip(&choices) {
            for (s, p) in sizes.iter_mut().zip(&menu(*copy)[ci]) {
                *s += p;
            }
        }
        let max = sizes.iter().max().unwrap();
        let min = sizes.iter().min().unwrap();
        assert!(max - min <= 1, "sizes {sizes:?}");
        assert_eq!(sizes.iter().sum::<u64>(), 14);
    }

    #[test]
    fn reports_unreachable_targets() {
        // A single copy with one rigid pattern cannot balance (0, 5).
        let menu = |_oc: usize| vec![vec![0u64, 5u64]];
        assert!(balance_copies(&[0, 5], &[1], &menu, 30).is_none());
    }
}
