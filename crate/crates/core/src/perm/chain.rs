//! Stabilizer chains built with the deterministic Schreier–Sims procedure.

use std::collections::HashSet;

use super::Perm;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    /// Generators of the stabilizer of all earlier base points.
    pub gens: Vec<Perm>,
    pub orbit: Vec<usize>,
    /// `transversal[p] = u` with `u(base) = p`, for `p` in the orbit.
    pub transversal: Vec<Option<Perm>>,
    checked: HashSet<(usize, usize)>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            checked: HashSet::new(),
        }
    }

    fn add_generator(&mut self, g: Perm) {
        self.gens.push(g);
        let mut i = 0;
        // the orbit vector grows while we scan it
        while i < self.orbit.len() {
            let beta = self.orbit[i];
            for s in &self.gens {
                let gamma = s.apply(beta);
                if self.transversal[gamma].is_none() {
                    let u = s.then_unchecked(self.transversal[beta].as_ref().unwrap());
                    self.transversal[gamma] = Some(u);
                    self.orbit.push(gamma);
                }
            }
            i += 1;
        }
    }

    fn rep(&self, point: usize) -> Option<&Perm> {
        self.transversal[point].as_ref()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    /// Builds a complete chain whose base starts with `base_prefix`.
    pub fn build(degree: usize, gens: &[Perm], base_prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: base_prefix.iter().map(|&b| Level::new(degree, b)).collect(),
        };
        for g in gens {
            chain.insert(0, g.clone());
        }
        loop {
            let mut changed = false;
            for i in (0..chain.levels.len()).rev() {
                for sg in chain.pending_schreier_generators(i) {
                    changed |= chain.insert(i + 1, sg);
                }
            }
            if !changed {
                break;
            }
        }
        chain
    }

    /// Schreier generators at level `i` not yet sifted into the deeper chain.
    fn pending_schreier_generators(&mut self, i: usize) -> Vec<Perm> {
        let level = &mut self.levels[i];
        let mut out = Vec::new();
        for (oi, &beta) in level.orbit.iter().enumerate() {
            for (si, s) in level.gens.iter().enumerate() {
                if !level.checked.insert((oi, si)) {
                    continue;
                }
                let gamma = s.apply(beta);
                let u_beta = level.transversal[beta].as_ref().unwrap();
                let u_gamma = level.transversal[gamma].as_ref().unwrap();
                let sg = u_gamma.inverse().then_unchecked(&s.then_unchecked(u_beta));
                if !sg.is_identity() {
                    out.push(sg);
                }
            }
        }
        out
    }

    /// Sifts `h` into the chain from level `from`; returns whether the chain
    /// grew.
    fn insert(&mut self, from: usize, h: Perm) -> bool {
        let (residue, depth) = self.sift(&h, from);
        if residue.is_identity() {
            return false;
        }
        if depth == self.levels.len() {
            let b = residue.first_moved_point().unwrap();
            self.levels.push(Level::new(self.degree, b));
        }
        for k in from..=depth {
            self.levels[k].add_generator(residue.clone());
        }
        true
    }

    /// Strips `g` through levels `from..`, returning the residue and the
    /// level at which stripping stopped.
    pub fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        let mut j = from;
        while j < self.levels.len() {
            let level = &self.levels[j];
            match level.rep(h.apply(level.base)) {
                Some(u) => {
                    h = u.inverse().then_unchecked(&h);
                    j += 1;
                }
                None => break,
            }
        }
        (h, j)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && {
            let (residue, depth) = self.sift(g, 0);
            depth == self.levels.len() && residue.is_identity()
        }
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .try_fold(1u128, |acc, n| acc.checked_mul(n))
            .expect("group order overflows u128")
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// The chain of the stabilizer of the first `k` base points.
    pub fn tail(&self, k: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            levels: self.levels[k..].to_vec(),
        }
    }

    /// Visits every element exactly once, each alongside its image under a
    /// homomorphism given by its values on transversal elements.
    ///
    /// Elements are enumerated as `u_0 ∘ u_1 ∘ … ∘ u_{k-1}` with `u_i` drawn
    /// from the level-`i` transversal in orbit order.
    pub fn for_each_element_with_image<F>(&self, image: impl Fn(&Perm) -> Perm, identity_image: Perm, mut f: F)
    where
        F: FnMut(&Perm, &Perm),
    {
        let reps: Vec<Vec<(Perm, Perm)>> = self
            .levels
            .iter()
            .map(|l| {
                l.orbit
                    .iter()
                    .map(|&p| {
                        let u = l.transversal[p].clone().unwrap();
                        let iu = image(&u);
                        (u, iu)
                    })
                    .collect()
            })
            .collect();
        fn walk<F: FnMut(&Perm, &Perm)>(reps: &[Vec<(Perm, Perm)>], prefix: &Perm, prefix_image: &Perm, f: &mut F) {
            match reps.split_first() {
                None => f(prefix, prefix_image),
                Some((level, rest)) => {
                    for (u, iu) in level {
                        walk(rest, &prefix.then_unchecked(u), &prefix_image.then_unchecked(iu), f);
                    }
                }
            }
        }
        walk(&reps, &Perm::identity(self.degree), &identity_image, &mut f);
    }

    pub fn for_each_element<F: FnMut(&Perm)>(&self, mut f: F) {
        self.for_each_element_with_image(|_| Perm::identity(0), Perm::identity(0), |g, _| f(g));
    }
}
