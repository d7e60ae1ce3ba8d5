use std::collections::VecDeque;

use super::{Perm, PermGroup};
use crate::{Error, Result};

/// The action of a group on the left cosets `gH` of a subgroup, with
/// `x · gH = (xg)H`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    group: PermGroup,
    subgroup: PermGroup,
    transversal: Vec<Perm>,
    action_table: Vec<Perm>,
}

impl CosetAction {
    pub fn new(group: &PermGroup, subgroup: &PermGroup) -> Result<Self> {
        if group.degree() != subgroup.degree() || !subgroup.is_subgroup_of(group) {
            return Err(Error::NotASubgroup);
        }
        let mut act = CosetAction {
            group: group.clone(),
            subgroup: subgroup.clone(),
            transversal: vec![Perm::identity(group.degree())],
            action_table: Vec::new(),
        };
        let expected = group.order() / subgroup.order();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in group.generators() {
                let x = s.then_unchecked(&act.transversal[i]);
                if act.find_coset(&x).is_none() {
                    act.transversal.push(x);
                    queue.push_back(act.transversal.len() - 1);
                }
            }
        }
        debug_assert_eq!(act.transversal.len() as u128, expected);
        act.action_table = group
            .generators()
            .iter()
            .map(|s| act.image_unchecked(s))
            .collect();
        Ok(act)
    }

    fn find_coset(&self, x: &Perm) -> Option<usize> {
        self.transversal
            .iter()
            .position(|t| self.subgroup.contains(&t.inverse().then_unchecked(x)))
    }

    /// Index of the coset `xH`.
    pub fn coset_of(&self, x: &Perm) -> Result<usize> {
        if !self.group.contains(x) {
            return Err(Error::NotAMember);
        }
        Ok(self.find_coset(x).expect("transversal covers every coset"))
    }

    pub(crate) fn image_unchecked(&self, x: &Perm) -> Perm {
        let images = self
            .transversal
            .iter()
            .map(|t| self.find_coset(&x.then_unchecked(t)).unwrap() as u32)
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// The permutation of coset indices induced by `x`.
    pub fn image(&self, x: &Perm) -> Result<Perm> {
        if !self.group.contains(x) {
            return Err(Error::NotAMember);
        }
        Ok(self.image_unchecked(x))
    }

    pub fn coset_count(&self) -> usize {
        self.transversal.len()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    /// Coset representatives; entry 0 is the identity.
    pub fn transversal(&self) -> &[Perm] {
        &self.transversal
    }

    /// One coset permutation per group generator, in generator order.
    pub fn action_table(&self) -> &[Perm] {
        &self.action_table
    }

    /// The image of the group in `Sym(G/H)`.
    pub fn image_group(&self) -> PermGroup {
        PermGroup::new(self.coset_count(), self.action_table.clone()).unwrap()
    }
}

/// Sizes of the `⟨g0⟩`-orbits on `G/H`, sorted descending.
pub fn cyclic_orbit_sizes(g0: &Perm, act: &CosetAction) -> Result<Vec<usize>> {
    let image = act.image(g0)?;
    Ok(image.cycle_type())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn whole_group_gives_one_coset() {
        let s4 = PermGroup::symmetric(4);
        let act = CosetAction::new(&s4, &s4).unwrap();
        assert_eq!(act.coset_count(), 1);
        assert!(act.action_table().iter().all(Perm::is_identity));
    }

    #[test]
    fn s4_over_point_stabilizer_is_natural_action() {
        let s4 = PermGroup::symmetric(4);
        let s3 = s4.pointwise_stabilizer(&[0]).unwrap();
        let act = CosetAction::new(&s4, &s3).unwrap();
        assert_eq!(act.coset_count(), 4);
        assert!(act.transversal()[0].is_identity());
        // cycle-type census of the coset action matches the natural action
        let mut census_coset = Vec::new();
        let mut census_natural = Vec::new();
        for g in s4.elements(1000).unwrap() {
            census_coset.push(act.image(&g).unwrap().cycle_type());
            census_natural.push(g.cycle_type());
        }
        census_coset.sort();
        census_natural.sort();
        assert_eq!(census_coset, census_natural);
    }

    #[test]
    fn a4_over_order_two_subgroup() {
        let a4 = PermGroup::alternating(4);
        let h = PermGroup::new(4, vec![cyc(4, &[&[0, 1], &[2, 3]])]).unwrap();
        let act = CosetAction::new(&a4, &h).unwrap();
        assert_eq!(act.coset_count(), 6);
    }

    #[test]
    fn rejects_non_subgroup() {
        let a4 = PermGroup::alternating(4);
        let h = PermGroup::new(4, vec![cyc(4, &[&[0, 1]])]).unwrap();
        assert_eq!(CosetAction::new(&a4, &h).unwrap_err(), Error::NotASubgroup);
    }

    #[test]
    fn orbit_sizes_under_cycles() {
        let s4 = PermGroup::symmetric(4);
        let s3 = s4.pointwise_stabilizer(&[0]).unwrap();
        let act = CosetAction::new(&s4, &s3).unwrap();
        assert_eq!(cyclic_orbit_sizes(&Perm::identity(4), &act).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(cyclic_orbit_sizes(&cyc(4, &[&[0, 1, 2, 3]]), &act).unwrap(), vec![4]);
        assert_eq!(cyclic_orbit_sizes(&cyc(4, &[&[1, 2, 3]]), &act).unwrap(), vec![3, 1]);
        let a4 = PermGroup::alternating(4);
        let act = CosetAction::new(&a4, &a4.pointwise_stabilizer(&[0]).unwrap()).unwrap();
        assert_eq!(
            cyclic_orbit_sizes(&cyc(4, &[&[0, 1]]), &act).unwrap_err(),
            Error::NotAMember
        );
    }
}
