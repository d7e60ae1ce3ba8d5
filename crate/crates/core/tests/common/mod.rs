//! Independent oracles shared by the integration and acceptance suites.
//! Nothing here calls into the code paths it is used to check.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use degenera::graph::DartGraph;
use degenera::perm::Perm;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- groups

/// All elements of `⟨gens⟩` by breadth-first closure, or `None` past `limit`.
pub fn closure(degree: usize, gens: &[Vec<usize>], limit: usize) -> Option<Vec<Vec<usize>>> {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Some(out)
}

pub fn random_perm(degree: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..degree).collect();
    v.shuffle(rng);
    v
}

/// Random generating sets whose closure has at most `limit` elements.
pub fn random_small_groups(count: usize, limit: usize, seed: u64) -> Vec<(usize, Vec<Vec<usize>>, usize)> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let degree = r.gen_range(2..=9);
        let ngens = r.gen_range(1..=3);
        let mut gens: Vec<Vec<usize>> = (0..ngens).map(|_| random_perm(degree, &mut r)).collect();
        // sparse permutations keep many groups intransitive and small
        if r.gen_bool(0.5) {
            for g in gens.iter_mut() {
                let fixed: Vec<usize> = (0..degree).collect();
                let k = r.gen_range(2..=degree.min(4));
                let mut pts = fixed.clone();
                pts.shuffle(&mut r);
                let mut h = fixed;
                let chosen = &pts[..k];
                for i in 0..k {
                    h[chosen[i]] = chosen[(i + 1) % k];
                }
                *g = h;
            }
        }
        if let Some(els) = closure(degree, &gens, limit) {
            out.push((degree, gens, els.len()));
        }
    }
    out
}

pub fn perm(images: &[usize]) -> Perm {
    Perm::from_images(images.to_vec()).unwrap()
}

// ---------------------------------------------------------------- graphs

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `|Aut|` on darts by brute force over vertex bijections: each
/// multiplicity-preserving bijection extends in `∏ m_uv! · ∏ (l_u! 2^{l_u})`
/// ways.
pub fn brute_force_aut_order(g: &DartGraph) -> u128 {
    let n = g.vertex_count();
    let mult = |u: usize, v: usize| g.multiplicity(u, v);
    let mut count = 0u128;
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        if (0..n).all(|u| (u..n).all(|v| mult(u, v) == mult(p[u], p[v]))) {
            count += 1;
        }
    });
    let mut local = 1u128;
    for u in 0..n {
        for v in u + 1..n {
            local *= factorial(mult(u, v));
        }
        let l = mult(u, u);
        local *= factorial(l) * (1u128 << l);
    }
    count * local
}

/// Number of vertex bijections preserving all multiplicities.
pub fn brute_force_vertex_aut_count(g: &DartGraph) -> u128 {
    let n = g.vertex_count();
    let mut count = 0u128;
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        if (0..n).all(|u| (u..n).all(|v| g.multiplicity(u, v) == g.multiplicity(p[u], p[v]))) {
            count += 1;
        }
    });
    count
}

pub fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Exhaustive filter over all dart permutations.
pub fn dart_filter_aut_order(g: &DartGraph) -> u128 {
    let d = g.dart_count();
    let mut count = 0u128;
    let mut perm: Vec<usize> = (0..d).collect();
    permutations(&mut perm, 0, &mut |p| {
        let commutes = (0..d).all(|x| p[x ^ 1] == p[x] ^ 1);
        if !commutes {
            return;
        }
        let mut vmap = vec![None; g.vertex_count()];
        let covers = (0..d).all(|x| {
            let (v, w) = (g.dart_vertex(x), g.dart_vertex(p[x]));
            *vmap[v].get_or_insert(w) == w
        });
        if covers {
            count += 1;
        }
    });
    count
}

/// Random connected multigraph (loops and parallel edges allowed) with
/// every degree at least `min_degree`.
pub fn random_multigraph(rng: &mut impl Rng, max_vertices: usize, min_degree: usize) -> DartGraph {
    let n = rng.gen_range(1..=max_vertices);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    loop {
        let low: Vec<usize> = (0..n).filter(|&v| deg[v] < min_degree).collect();
        let Some(&u) = low.first() else { break };
        let v = rng.gen_range(0..n);
        edges.push((u, v));
        deg[u] += 1;
        deg[v] += 1;
    }
    // a few extra edges for variety
    for _ in 0..rng.gen_range(0..3) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        edges.push((u, v));
    }
    DartGraph::new(n, edges).unwrap()
}

/// Random relabelling of vertices, edge order and edge orientation.
pub fn random_relabel(g: &DartGraph, rng: &mut impl Rng) -> DartGraph {
    let vmap = random_perm(g.vertex_count(), rng);
    let order = random_perm(g.edge_count(), rng);
    let flips: Vec<bool> = (0..g.edge_count()).map(|_| rng.gen_bool(0.5)).collect();
    g.relabel(&vmap, &order, &flips)
}

// ------------------------------------------------------------- arithmetic

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `disc(f)` via the Sylvester matrix of `f` and `f′`.
pub fn sylvester_discriminant(coeffs: &[i64]) -> BigInt {
    let f: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
    let n = f.len() - 1;
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();
    let m = df.len() - 1;
    let size = n + m;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    // rows hold coefficients from the top degree down
    for r in 0..m {
        for (j, c) in f.iter().rev().enumerate() {
            rows[r][r + j] = c.clone();
        }
    }
    for r in 0..n {
        for (j, c) in df.iter().rev().enumerate() {
            rows[m + r][r + j] = c.clone();
        }
    }
    let res = bareiss_det(rows);
    let lc = f[n].clone();
    let q = res / lc;
    if (n * (n - 1) / 2) % 2 == 1 {
        -q
    } else {
        q
    }
}

// polynomials mod p as ascending Vec<u64>, independent of the library

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let li = inv(b[db], p);
    while r.len() > db {
        let c = r[r.len() - 1] * li % p;
        let shift = r.len() - 1 - db;
        for i in 0..=db {
            r[shift + i] = (r[shift + i] + p * p - c * b[i] % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn poly_divexact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let li = inv(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let c = r[r.len() - 1] * li % p;
        let shift = r.len() - 1 - db;
        q[shift] = c;
        for i in 0..=db {
            r[shift + i] = (r[shift + i] + p * p - c * b[i] % p) % p;
        }
        trim(&mut r);
    }
    assert!(r.is_empty());
    q
}

fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// Monic irreducibles of degree 2 and 3 over `F_p` (no roots).
fn small_irreducibles(p: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            let q = vec![b, a, 1];
            if (0..p).all(|x| eval(&q, x, p) != 0) {
                out.push(q);
            }
        }
    }
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                let q = vec![c, b, a, 1];
                if (0..p).all(|x| eval(&q, x, p) != 0) {
                    out.push(q);
                }
            }
        }
    }
    out
}

/// Complete factorization by trial division over monic polynomials of
/// degree ≤ 3 (linear factors via roots). Valid for degree ≤ 7, since a
/// cofactor with no factor of degree ≤ 3 is irreducible.
pub struct TrialDivision {
    p: u64,
    irreducibles: Vec<Vec<u64>>,
}

impl TrialDivision {
    pub fn new(p: u64) -> Self {
        TrialDivision { p, irreducibles: small_irreducibles(p) }
    }

    /// Sorted-descending factor degrees of a squarefree `f` (ascending
    /// coefficients, reduced mod p, monic not required).
    pub fn pattern(&self, f: &[u64]) -> Vec<u32> {
        let p = self.p;
        let mut f = f.to_vec();
        trim(&mut f);
        assert!(f.len() <= 8);
        let mut out = Vec::new();
        for x in 0..p {
            if f.len() > 1 && eval(&f, x, p) == 0 {
                f = poly_divexact(&f, &[(p - x) % p, 1], p);
                out.push(1);
            }
        }
        for q in &self.irreducibles {
            if f.len() <= q.len() - 1 {
                break;
            }
            if poly_rem(&f, q, p).is_empty() {
                f = poly_divexact(&f, q, p);
                out.push((q.len() - 1) as u32);
            }
        }
        if f.len() > 1 {
            out.push((f.len() - 1) as u32);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Factor degrees of a squarefree `f` from Frobenius fixed-space
/// dimensions: `dim ker(Q^d − I) = Σ_k n_k · gcd(k, d)` where `Q` is the
/// Berlekamp matrix of `x ↦ x^p` on `F_p[x]/(f)` and `n_k` counts
/// irreducible factors of degree `k`.
pub fn berlekamp_pattern(f: &[u64], p: u64) -> Vec<u32> {
    let mut f = f.to_vec();
    trim(&mut f);
    let n = f.len() - 1;
    // column j of Q is x^{jp} mod f
    let mulmod = |a: &[u64], b: &[u64]| {
        let mut out = vec![0u64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        poly_rem(&out, &f, p)
    };
    let mut xp = vec![1u64];
    let mut base = poly_rem(&[0, 1], &f, p);
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            xp = mulmod(&xp, &base);
        }
        base = mulmod(&base, &base);
        e >>= 1;
    }
    let mut q = vec![vec![0u64; n]; n];
    let mut col = poly_rem(&[1], &f, p);
    for j in 0..n {
        for i in 0..n {
            q[i][j] = col.get(i).copied().unwrap_or(0);
        }
        col = mulmod(&col, &xp);
    }
    let matmul = |a: &Vec<Vec<u64>>, b: &Vec<Vec<u64>>| {
        let mut c = vec![vec![0u64; n]; n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
                }
            }
        }
        c
    };
    let rank = |mut m: Vec<Vec<u64>>| {
        let mut r = 0;
        for c in 0..n {
            let Some(pivot) = (r..n).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, pivot);
            let pi = inv(m[r][c], p);
            for i in 0..n {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c] * pi % p;
                    for j in 0..n {
                        m[i][j] = (m[i][j] + p * p - f * m[r][j] % p) % p;
                    }
                }
            }
            r += 1;
        }
        r
    };
    let mut power = q.clone();
    let mut fixed_dims = Vec::with_capacity(n);
    for _d in 1..=n {
        let mut m = power.clone();
        for i in 0..n {
            m[i][i] = (m[i][i] + p - 1) % p;
        }
        fixed_dims.push(n - rank(m));
        power = matmul(&power, &q);
    }
    // With c_e = #{factors of degree divisible by e}, dim_d = Σ_{e|d} φ(e) c_e,
    // so φ(d) c_d = Σ_{e|d} μ(d/e) dim_e and n_k = Σ_{k|j} μ(j/k) c_j.
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mobius = |mut m: usize| {
        let mut sign = 1i64;
        let mut q = 2;
        while q * q <= m {
            if m % q == 0 {
                m /= q;
                if m % q == 0 {
                    return 0;
                }
                sign = -sign;
            }
            q += 1;
        }
        if m > 1 {
            sign = -sign;
        }
        sign
    };
    let phi = |m: usize| (1..=m).filter(|&k| gcd(k, m) == 1).count() as i64;
    let mut c = vec![0i64; n + 1];
    for d in 1..=n {
        let s: i64 = (1..=d).filter(|e| d % e == 0).map(|e| mobius(d / e) * fixed_dims[e - 1] as i64).sum();
        assert_eq!(s % phi(d), 0);
        c[d] = s / phi(d);
    }
    let mut counts = vec![0i64; n + 1];
    for k in 1..=n {
        counts[k] = (k..=n).step_by(k).map(|j| mobius(j / k) * c[j]).sum();
        assert!(counts[k] >= 0);
    }
    let mut out = Vec::new();
    for k in (1..=n).rev() {
        for _ in 0..counts[k] {
            out.push(k as u32);
        }
    }
    out
}

/// Reduce small integer coefficients mod p.
pub fn reduce(coeffs: &[i64], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
    trim(&mut out);
    out
}

/// Random monic squarefree integer polynomials of degree 1..=6.
pub fn random_monic_squarefree(count: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let deg = r.gen_range(1..=6);
        let mut c: Vec<i64> = (0..deg).map(|_| r.gen_range(-9..=9)).collect();
        c.push(1);
        if !sylvester_discriminant(&c).is_zero() {
            out.push(c);
        }
    }
    out
}
