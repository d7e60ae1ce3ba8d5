use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use super::chain::StabChain;
use super::Perm;
use crate::{Error, Result};

/// A permutation group given by generators, with a stabilizer chain built
/// on first use.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    /// The group generated by `gens` on `degree` points. Identity generators
    /// are dropped; an empty list gives the trivial group.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators: gens.into_iter().filter(|g| !g.is_identity()).collect(),
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let cycle: Vec<usize> = (0..n).collect();
            gens.push(Perm::from_cycles(n, &[&cycle]).unwrap());
            gens.push(Perm::from_cycles(n, &[&[0, 1]]).unwrap());
        }
        PermGroup::new(n, gens).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (2..n)
            .map(|i| Perm::from_cycles(n, &[&[0, 1, i]]).unwrap())
            .collect();
        PermGroup::new(n, gens).unwrap()
    }

    fn from_chain(chain: StabChain) -> Self {
        let degree = chain.degree;
        let generators = chain
            .levels
            .first()
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        let cell = OnceLock::new();
        let _ = cell.set(chain);
        PermGroup {
            degree,
            generators,
            chain: cell,
        }
    }

    pub(crate) fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &[]))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty() || self.order() == 1
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// The orbit of `point`, sorted.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        let mut out = vec![point];
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// All orbits, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut covered = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !covered[x] {
                let orb = self.orbit(x).unwrap();
                for &y in &orb {
                    covered[y] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// The subgroup fixing each of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let mut prefix: Vec<usize> = Vec::new();
        for &p in points {
            if !prefix.contains(&p) {
                prefix.push(p);
            }
        }
        let chain = StabChain::build(self.degree, &self.generators, &prefix);
        Ok(PermGroup::from_chain(chain.tail(prefix.len())))
    }

    /// The subgroup mapping `points` onto itself, found by filtering all
    /// elements.
    pub fn setwise_stabilizer(&self, points: &[usize], cap: u128) -> Result<PermGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let mut inside = vec![false; self.degree];
        for &p in points {
            inside[p] = true;
        }
        self.filter_subgroup(cap, |g| (0..self.degree).all(|x| !inside[x] || inside[g.apply(x)]))
    }

    /// Intersection with `other`, by filtering the elements of `self`.
    pub fn intersection(&self, other: &PermGroup, cap: u128) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        self.filter_subgroup(cap, |g| other.contains(g))
    }

    /// The subgroup of elements satisfying `keep`, which must be closed
    /// under multiplication.
    fn filter_subgroup(&self, cap: u128, keep: impl Fn(&Perm) -> bool) -> Result<PermGroup> {
        self.check_cap(cap)?;
        let mut sub = PermGroup::trivial(self.degree);
        self.chain().for_each_element(|g| {
            if keep(g) && !sub.contains(g) {
                let mut gens = sub.generators.clone();
                gens.push(g.clone());
                sub = PermGroup::new(self.degree, gens).unwrap();
            }
        });
        Ok(sub)
    }

    pub(crate) fn check_cap(&self, cap: u128) -> Result<()> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        Ok(())
    }

    /// Every element, in the chain's enumeration order.
    pub fn elements(&self, cap: u128) -> Result<Vec<Perm>> {
        self.check_cap(cap)?;
        let mut out = Vec::with_capacity(self.order() as usize);
        self.chain().for_each_element(|g| out.push(g.clone()));
        Ok(out)
    }

    /// Visits every element without materialising the list.
    pub fn for_each_element<F: FnMut(&Perm)>(&self, cap: u128, f: F) -> Result<()> {
        self.check_cap(cap)?;
        self.chain().for_each_element(f);
        Ok(())
    }

    /// Restriction of every generator to the invariant initial segment
    /// `0..n`. The caller guarantees invariance and faithfulness when the
    /// result is used as an isomorphic copy.
    pub(crate) fn restrict(&self, n: usize) -> PermGroup {
        PermGroup::new(n, self.generators.iter().map(|g| g.restrict(n)).collect()).unwrap()
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}
