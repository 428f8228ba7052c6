use alloc::vec::Vec;

use super::{enforce_realizability, GroupDegreeProfile};

/// [`fix_parity_toward`] measured against the input itself.
pub fn fix_parity(profile: &GroupDegreeProfile) -> GroupDegreeProfile {
    fix_parity_toward(profile, profile)
}

/// Makes the degree sum even by moving one group's degree by one.
///
/// Only a group with odd `size * degree` can flip the parity. Candidates are
/// tried smallest size first, then lower degree, then lower index; for the
/// first candidate where raising or lowering keeps the Erdős–Gallai
/// inequalities, the direction closer (in node-level l1) to `reference` wins,
/// lowering on ties. If no candidate works, the first one is lowered and the
/// profile re-enforced, and the search repeats.
///
/// `profile` must satisfy the inequalities; the result then is realizable.
pub fn fix_parity_toward(
    profile: &GroupDegreeProfile,
    reference: &GroupDegreeProfile,
) -> GroupDegreeProfile {
    let max_degree = profile.node_count().saturating_sub(1) as u32;
    let mut current = profile.clone();
    while current.degree_sum() % 2 == 1 {
        let mut candidates: Vec<usize> = (0..current.group_count())
            .filter(|&g| current.sizes()[g] % 2 == 1 && current.delta()[g] % 2 == 1)
            .collect();
        assert!(!candidates.is_empty(), "an odd total needs an odd group");
        candidates.sort_by_key(|&g| (current.sizes()[g], current.delta()[g], g));

        let mut fixed = None;
        for &g in &candidates {
            let mut options = Vec::with_capacity(2);
            let d = current.delta()[g];
            for next in [d - 1, d + 1] {
                if next > max_degree {
                    continue;
                }
                let mut delta = current.delta().to_vec();
                delta[g] = next;
                let cand = current.with_delta(delta);
                if cand.satisfies_erdos_gallai() {
                    options.push(cand);
                }
            }
            // options holds the decrease first, so min_by_key keeps it on ties
            if let Some(best) = options.into_iter().min_by_key(|c| c.distance(reference)) {
                fixed = Some(best);
                break;
            }
        }
        current = match fixed {
            Some(p) => p,
            None => {
                let g = candidates[0];
                let mut delta = current.delta().to_vec();
                delta[g] -= 1;
                enforce_realizability(&current.with_delta(delta))
            }
        };
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn profile(delta: &[u32], sizes: &[usize]) -> GroupDegreeProfile {
        GroupDegreeProfile::new(delta.to_vec(), sizes.to_vec()).unwrap()
    }

    #[test]
    fn increase_when_decrease_breaks_inequalities() {
        let p = profile(&[3, 1], &[2, 3]);
        assert!(!profile(&[3, 0], &[2, 3]).satisfies_erdos_gallai());
        let out = fix_parity(&p);
        assert_eq!(out.delta(), &[3, 2]);
        assert_eq!(out.sorted_sequence(), vec![3, 3, 2, 2, 2]);
        assert!(out.is_realizable());
    }

    #[test]
    fn even_sum_is_untouched() {
        let p = profile(&[2, 1], &[2, 2]);
        assert_eq!(fix_parity(&p), p);
    }

    #[test]
    fn tie_prefers_decrease() {
        let out = fix_parity(&profile(&[1], &[3]));
        assert_eq!(out.delta(), &[0]);
    }

    #[test]
    fn reference_breaks_the_tie_upward() {
        let p = profile(&[1], &[3]);
        let reference = profile(&[2], &[3]);
        assert_eq!(fix_parity_toward(&p, &reference).delta(), &[2]);
    }

    #[test]
    fn smallest_group_is_moved() {
        // three odd groups; the first of the two size-3 groups moves down
        let p = profile(&[1, 1, 1], &[5, 3, 3]);
        let out = fix_parity(&p);
        assert_eq!(out.delta(), &[1, 0, 1]);
        assert!(out.is_realizable());
    }
}
