use std::cmp::Reverse;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{CosetAction, Perm, PermGroup};
use crate::Result;

/// An element `g0` whose cyclic subgroup has only even-sized orbits on a
/// coset space `G/H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCertificate {
    pub element: Perm,
    pub element_order: u128,
    /// Sorted descending.
    pub orbit_sizes: Vec<usize>,
}

impl OrbitCertificate {
    /// Recomputes the orbit sizes of `element` on `G/H` from scratch and
    /// checks them against the stored multiset.
    pub fn verify(&self, group: &PermGroup, subgroup: &PermGroup) -> Result<bool> {
        let act = CosetAction::new(group, subgroup)?;
        let sizes = super::cyclic_orbit_sizes(&self.element, &act)?;
        Ok(sizes == self.orbit_sizes
            && self.element.order() == self.element_order
            && sizes.iter().all(|&s| s % 2 == 0 && self.element_order % s as u128 == 0))
    }
}

/// Order in which candidate elements are tried.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchPolicy {
    /// 2-power orders absent from `H` first, then 2-power elements with no
    /// conjugate in `H`, then everything else; within a tier by increasing
    /// order, then fewer and longer orbits, then lexicographic image array.
    #[default]
    TwoPowerFirst,
    /// Increasing element order, then fewer and longer orbits, then
    /// lexicographic image array.
    MinimalOrder,
}

fn is_power_of_two(n: u128) -> bool {
    n.is_power_of_two()
}

/// Looks for `g0 ∈ G` all of whose `⟨g0⟩`-orbits on `G/H` have even size.
///
/// Every element of `G` is visited (subject to `cap`); the certificate
/// returned is the least successful candidate under `policy`.
pub fn even_orbit_search(
    group: &PermGroup,
    subgroup: &PermGroup,
    cap: u128,
    policy: SearchPolicy,
) -> Result<Option<OrbitCertificate>> {
    group.check_cap(cap)?;
    let act = CosetAction::new(group, subgroup)?;
    let mut subgroup_orders = BTreeSet::new();
    subgroup.for_each_element(cap, |h| {
        subgroup_orders.insert(h.order());
    })?;

    // fewer, longer orbits first; `Reverse` on the descending size list
    type Key = (u8, u128, Reverse<Vec<usize>>, Perm);
    let mut best: Option<Key> = None;
    group.chain().for_each_element_with_image(
        |u| act.image_unchecked(u),
        Perm::identity(act.coset_count()),
        |g, on_cosets| {
            let sizes = on_cosets.cycle_type();
            if !sizes.iter().all(|s| s % 2 == 0) {
                return;
            }
            let order = g.order();
            let tier = match policy {
                SearchPolicy::MinimalOrder => 0,
                SearchPolicy::TwoPowerFirst if is_power_of_two(order) && !subgroup_orders.contains(&order) => 0,
                // no fixed coset means no conjugate in H
                SearchPolicy::TwoPowerFirst if is_power_of_two(order) && !sizes.contains(&1) => 1,
                SearchPolicy::TwoPowerFirst => 2,
            };
            let key = (tier, order, Reverse(sizes));
            if best.as_ref().is_none_or(|(t, o, s, p)| (&key.0, &key.1, &key.2, g) < (t, o, s, p)) {
                best = Some((key.0, key.1, key.2, g.clone()));
            }
        },
    );
    Ok(best.map(|(_, element_order, Reverse(orbit_sizes), element)| OrbitCertificate {
        element,
        element_order,
        orbit_sizes,
    }))
}

/// Whether some element of 2-power order fixes no coset of `H` (equivalently
/// lies in no conjugate of `H`). Such an element always has even orbits.
pub fn has_two_power_element_outside_conjugates(group: &PermGroup, subgroup: &PermGroup, cap: u128) -> Result<bool> {
    group.check_cap(cap)?;
    let act = CosetAction::new(group, subgroup)?;
    let mut found = false;
    group.chain().for_each_element_with_image(
        |u| act.image_unchecked(u),
        Perm::identity(act.coset_count()),
        |g, on_cosets| {
            if !found && is_power_of_two(g.order()) && (0..on_cosets.degree()).all(|i| on_cosets.apply(i) != i) {
                found = true;
            }
        },
    );
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ENUMERATION_CAP as CAP;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn s4_over_s3_gives_four_cycle() {
        let s4 = PermGroup::symmetric(4);
        let s3 = s4.pointwise_stabilizer(&[0]).unwrap();
        let cert = even_orbit_search(&s4, &s3, CAP, SearchPolicy::default()).unwrap().unwrap();
        assert_eq!(cert.element_order, 4);
        assert_eq!(cert.orbit_sizes, vec![4]);
        assert!(cert.verify(&s4, &s3).unwrap());
        // the smallest-order choice is a double transposition instead
        let cert = even_orbit_search(&s4, &s3, CAP, SearchPolicy::MinimalOrder).unwrap().unwrap();
        assert_eq!(cert.element_order, 2);
        assert_eq!(cert.orbit_sizes, vec![2, 2]);
    }

    #[test]
    fn a4_over_order_two_subgroup_has_no_certificate() {
        let a4 = PermGroup::alternating(4);
        let h = PermGroup::new(4, vec![cyc(4, &[&[0, 1], &[2, 3]])]).unwrap();
        for policy in [SearchPolicy::TwoPowerFirst, SearchPolicy::MinimalOrder] {
            assert_eq!(even_orbit_search(&a4, &h, CAP, policy).unwrap(), None);
        }
        assert!(!has_two_power_element_outside_conjugates(&a4, &h, CAP).unwrap());
    }

    #[test]
    fn involution_acting_regularly() {
        let z2 = PermGroup::new(2, vec![cyc(2, &[&[0, 1]])]).unwrap();
        let cert = even_orbit_search(&z2, &PermGroup::trivial(2), CAP, SearchPolicy::default())
            .unwrap()
            .unwrap();
        assert_eq!(cert.orbit_sizes, vec![2]);
        assert_eq!(cert.element.images(), vec![1, 0]);
    }

    #[test]
    fn respects_cap() {
        let s7 = PermGroup::symmetric(7);
        assert!(even_orbit_search(&s7, &PermGroup::trivial(7), 100, SearchPolicy::default()).is_err());
    }
}
