//! Exact rational polyhedral cones.
//!
//! A cone is stored with both descriptions: generators (extreme rays plus
//! a lineality basis) and supports (facet inequalities plus the equations
//! cutting out its span). Conversion between the two runs the double
//! description method over exact integers; every stored vector is integer
//! and primitive. Extreme rays are canonicalized by projecting along the
//! lineality space, so structural equality of the generator data is
//! geometric equality of the cones.

use num::{BigRational, Integer, One, Signed, Zero};

use crate::lattice::{canonical_subspace_basis, primitive, IntMatrix};
use crate::lattice::Int;

pub(crate) fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn matrix_from_rows(rows: &[Vec<Int>], cols: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows.len(), cols);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    m
}

/// Double description: generators of `{x : e.x = 0 forall e, a.x >= 0
/// forall a}` as (extreme rays, lineality basis). Rays are primitive;
/// extreme only modulo the returned lineality.
pub(crate) fn double_description(
    dim: usize,
    equations: &[Vec<Int>],
    inequalities: &[Vec<Int>],
) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let mut lineality: Vec<Vec<Int>> = (0..dim)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::one();
            e
        })
        .collect();
    let mut rays: Vec<Vec<Int>> = Vec::new();
    let mut processed_eqs: Vec<Vec<Int>> = Vec::new();
    let mut processed_ineqs: Vec<Vec<Int>> = Vec::new();

    let norm = |v: Vec<Int>| primitive(&v).expect("nonzero vector in double description");

    for e in equations {
        if let Some(pos) = lineality.iter().position(|w| !dot(e, w).is_zero()) {
            let w0 = lineality.remove(pos);
            let a0 = dot(e, &w0);
            for w in lineality.iter_mut() {
                let c = dot(e, w);
                if !c.is_zero() {
                    let new: Vec<Int> = w
                        .iter()
                        .zip(&w0)
                        .map(|(wi, w0i)| &a0 * wi - &c * w0i)
                        .collect();
                    *w = norm(new);
                }
            }
            for r in rays.iter_mut() {
                let c = dot(e, r);
                if !c.is_zero() {
                    let new: Vec<Int> = if a0.is_positive() {
                        r.iter().zip(&w0).map(|(ri, w0i)| &a0 * ri - &c * w0i).collect()
                    } else {
                        r.iter().zip(&w0).map(|(ri, w0i)| -&a0 * ri + &c * w0i).collect()
                    };
                    *r = norm(new);
                }
            }
        } else {
            rays = combine_step(dim, &lineality, rays, e, &processed_eqs, &processed_ineqs, true);
        }
        processed_eqs.push(e.clone());
    }

    for a in inequalities {
        if let Some(pos) = lineality.iter().position(|w| !dot(a, w).is_zero()) {
            let mut w0 = lineality.remove(pos);
            if dot(a, &w0).is_negative() {
                for x in w0.iter_mut() {
                    *x = -&*x;
                }
            }
            let a0 = dot(a, &w0);
            for w in lineality.iter_mut() {
                let c = dot(a, w);
                if !c.is_zero() {
                    let new: Vec<Int> = w
                        .iter()
                        .zip(&w0)
                        .map(|(wi, w0i)| &a0 * wi - &c * w0i)
                        .collect();
                    *w = norm(new);
                }
            }
            for r in rays.iter_mut() {
                let c = dot(a, r);
                if !c.is_zero() {
                    let new: Vec<Int> = r
                        .iter()
                        .zip(&w0)
                        .map(|(ri, w0i)| &a0 * ri - &c * w0i)
                        .collect();
                    *r = norm(new);
                }
            }
            rays.push(w0);
        } else {
            rays = combine_step(dim, &lineality, rays, a, &processed_eqs, &processed_ineqs, false);
        }
        processed_ineqs.push(a.clone());
    }

    rays.sort();
    rays.dedup();
    (rays, lineality)
}

/// One halfspace (or hyperplane) insertion step of the double description
/// method, assuming the constraint vanishes on the current lineality.
#[allow(clippy::too_many_arguments)]
fn combine_step(
    dim: usize,
    lineality: &[Vec<Int>],
    rays: Vec<Vec<Int>>,
    a: &[Int],
    processed_eqs: &[Vec<Int>],
    processed_ineqs: &[Vec<Int>],
    equation: bool,
) -> Vec<Vec<Int>> {
    let evals: Vec<Int> = rays.iter().map(|r| dot(a, r)).collect();
    let pos: Vec<usize> = (0..rays.len()).filter(|&i| evals[i].is_positive()).collect();
    let neg: Vec<usize> = (0..rays.len()).filter(|&i| evals[i].is_negative()).collect();
    if neg.is_empty() && !equation {
        return rays;
    }
    if pos.is_empty() && neg.is_empty() {
        return rays;
    }

    let tight = |r: &Vec<Int>| -> Vec<usize> {
        processed_ineqs
            .iter()
            .enumerate()
            .filter(|(_, b)| dot(b, r).is_zero())
            .map(|(k, _)| k)
            .collect()
    };
    let adjacent = |p: &Vec<Int>, n: &Vec<Int>| -> bool {
        let quotient_dim = dim - lineality.len();
        if quotient_dim < 2 {
            return false;
        }
        let tp = tight(p);
        let tn = tight(n);
        let common: Vec<usize> = tp.iter().copied().filter(|k| tn.contains(k)).collect();
        let mut rows: Vec<Vec<Int>> = processed_eqs.to_vec();
        rows.extend(common.iter().map(|&k| processed_ineqs[k].clone()));
        if rows.is_empty() {
            return quotient_dim == 2;
        }
        matrix_from_rows(&rows, dim).rank() == dim - lineality.len() - 2
    };

    let mut out: Vec<Vec<Int>> = Vec::new();
    for (i, r) in rays.iter().enumerate() {
        if evals[i].is_zero() || (!equation && evals[i].is_positive()) {
            out.push(r.clone());
        }
    }
    for &ip in &pos {
        for &in_ in &neg {
            if !adjacent(&rays[ip], &rays[in_]) {
                continue;
            }
            let (p, n) = (&rays[ip], &rays[in_]);
            let (ep, en) = (&evals[ip], &evals[in_]);
            let combo: Vec<Int> = p
                .iter()
                .zip(n)
                .map(|(pi, ni)| ep * ni - en * pi)
                .collect();
            if combo.iter().all(Int::is_zero) {
                continue;
            }
            out.push(primitive(&combo).unwrap());
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Orthogonal projection of `v` along the span of `lin`, rescaled to a
/// primitive integer vector. Canonical representative of a ray modulo
/// lineality.
fn project_mod_lineality(v: &[Int], lin: &[Vec<Int>]) -> Vec<Int> {
    if lin.is_empty() {
        return primitive(v).expect("nonzero ray");
    }
    let k = lin.len();
    // solve (L L^T) c = L v over the rationals
    let mut g = vec![vec![BigRational::zero(); k + 1]; k];
    for i in 0..k {
        for j in 0..k {
            g[i][j] = BigRational::from_integer(dot(&lin[i], &lin[j]));
        }
        g[i][k] = BigRational::from_integer(dot(&lin[i], v));
    }
    // Gaussian elimination; the Gram matrix of an independent family is invertible
    for col in 0..k {
        let piv = (col..k).find(|&i| !g[i][col].is_zero()).expect("Gram pivot");
        g.swap(col, piv);
        let p = g[col][col].clone();
        for j in col..=k {
            g[col][j] = &g[col][j] / &p;
        }
        for i in 0..k {
            if i != col && !g[i][col].is_zero() {
                let f = g[i][col].clone();
                for j in col..=k {
                    let v = &g[i][j] - &f * &g[col][j];
                    g[i][j] = v;
                }
            }
        }
    }
    let coeffs: Vec<BigRational> = (0..k).map(|i| g[i][k].clone()).collect();
    let mut proj: Vec<BigRational> = v
        .iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect();
    for (c, w) in coeffs.iter().zip(lin) {
        for (p, wi) in proj.iter_mut().zip(w) {
            *p -= c * BigRational::from_integer(wi.clone());
        }
    }
    let denom_lcm = proj
        .iter()
        .fold(Int::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<Int> = proj
        .iter()
        .map(|q| q.numer() * (&denom_lcm / q.denom()))
        .collect();
    primitive(&ints).expect("ray projects to zero: generator lies in the lineality space")
}

/// Pointed-or-not rational cone with canonical generator data.
#[derive(Clone, Debug)]
pub struct Cone {
    dim: usize,
    rays: Vec<Vec<Int>>,
    lineality: Vec<Vec<Int>>,
    facets: Vec<Vec<Int>>,
    span_eqs: Vec<Vec<Int>>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.rays == other.rays && self.lineality == other.lineality
    }
}

impl Eq for Cone {}

impl Cone {
    /// Cone generated by the given rays and lineality vectors. Generators
    /// may be redundant; the result stores canonical extreme data.
    pub fn from_generators(dim: usize, rays: &[Vec<Int>], lineality: &[Vec<Int>]) -> Cone {
        assert!(rays.iter().chain(lineality).all(|v| v.len() == dim));
        let gens: Vec<Vec<Int>> = rays
            .iter()
            .filter(|v| !v.iter().all(Int::is_zero))
            .cloned()
            .collect();
        let lins: Vec<Vec<Int>> = lineality
            .iter()
            .filter(|v| !v.iter().all(Int::is_zero))
            .cloned()
            .collect();
        // polar cone: facet normals and the equations cutting the span
        let (facets, span_perp) = double_description(dim, &lins, &gens);
        let span_eqs = if span_perp.is_empty() {
            Vec::new()
        } else {
            canonical_subspace_basis(&span_perp).expect("independent perp basis")
        };
        Self::from_supports_unchecked(dim, span_eqs, facets)
    }

    /// Cone from an H-description. Inequalities implied by the others are
    /// harmless; the stored facet list is recomputed canonically.
    pub fn from_supports(dim: usize, equations: &[Vec<Int>], inequalities: &[Vec<Int>]) -> Cone {
        let (rays, lin) = double_description(dim, equations, inequalities);
        Cone::from_generators(dim, &rays, &lin)
    }

    fn from_supports_unchecked(dim: usize, span_eqs: Vec<Vec<Int>>, facets: Vec<Vec<Int>>) -> Cone {
        let (vrays, vlin) = double_description(dim, &span_eqs, &facets);
        let lineality = if vlin.is_empty() {
            Vec::new()
        } else {
            canonical_subspace_basis(&vlin).expect("independent lineality basis")
        };
        let mut rays: Vec<Vec<Int>> = vrays
            .iter()
            .map(|r| project_mod_lineality(r, &lineality))
            .collect();
        rays.sort();
        rays.dedup();
        let mut facets = facets;
        facets.sort();
        Cone {
            dim,
            rays,
            lineality,
            facets,
            span_eqs,
        }
    }

    pub fn zero(dim: usize) -> Cone {
        Cone::from_generators(dim, &[], &[])
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the cone as a set.
    pub fn space_dim(&self) -> usize {
        self.dim - self.span_eqs.len()
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<Int>] {
        &self.lineality
    }

    pub fn facets(&self) -> &[Vec<Int>] {
        &self.facets
    }

    pub fn span_equations(&self) -> &[Vec<Int>] {
        &self.span_eqs
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn contains_point(&self, x: &[Int]) -> bool {
        self.span_eqs.iter().all(|e| dot(e, x).is_zero())
            && self.facets.iter().all(|f| !dot(f, x).is_negative())
    }

    pub fn relint_contains_point(&self, x: &[Int]) -> bool {
        self.span_eqs.iter().all(|e| dot(e, x).is_zero())
            && self.facets.iter().all(|f| dot(f, x).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains_point(r))
            && other.lineality.iter().all(|w| {
                self.span_eqs.iter().all(|e| dot(e, w).is_zero())
                    && self.facets.iter().all(|f| dot(f, w).is_zero())
            })
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.dim, other.dim, "intersection needs equal ambient dimension");
        let eqs: Vec<Vec<Int>> = self
            .span_eqs
            .iter()
            .chain(&other.span_eqs)
            .cloned()
            .collect();
        let ineqs: Vec<Vec<Int>> = self.facets.iter().chain(&other.facets).cloned().collect();
        Cone::from_supports(self.dim, &eqs, &ineqs)
    }

    /// Does the relative interior of `self` meet `other`? Equivalent to:
    /// the intersection is not trapped inside any single facet of `self`.
    pub fn relint_meets(&self, other: &Cone) -> bool {
        let k = self.intersect(other);
        !self.facets.iter().any(|f| {
            k.rays.iter().all(|r| dot(f, r).is_zero())
                && k.lineality.iter().all(|w| dot(f, w).is_zero())
        })
    }

    /// The relative interior of `self` is contained in the relative
    /// interior of `other` (assuming nothing): self is inside other and
    /// not inside any facet of other.
    pub fn relint_within(&self, other: &Cone) -> bool {
        other.contains_cone(self)
            && !other.facets.iter().any(|f| {
                self.rays.iter().all(|r| dot(f, r).is_zero())
                    && self.lineality.iter().all(|w| dot(f, w).is_zero())
            })
    }

    /// The face of `self` cut out by the facet normals in `tight`.
    pub fn face_cut(&self, tight: &[Vec<Int>]) -> Cone {
        let eqs: Vec<Vec<Int>> = self.span_eqs.iter().chain(tight).cloned().collect();
        Cone::from_supports(self.dim, &eqs, &self.facets)
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        if !other.contains_cone(self) {
            return false;
        }
        let tight: Vec<Vec<Int>> = other
            .facets
            .iter()
            .filter(|f| {
                self.rays.iter().all(|r| dot(f, r).is_zero())
                    && self.lineality.iter().all(|w| dot(f, w).is_zero())
            })
            .cloned()
            .collect();
        &other.face_cut(&tight) == self
    }

    /// All faces, the cone itself and its minimal face included.
    pub fn faces(&self) -> Vec<Cone> {
        let nf = self.facets.len();
        let mut out: Vec<Cone> = Vec::new();
        for mask in 0..(1u64 << nf.min(20)) {
            let tight: Vec<Vec<Int>> = (0..nf)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.facets[i].clone())
                .collect();
            let f = self.face_cut(&tight);
            if !out.contains(&f) {
                out.push(f);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn quadrant() {
        let c = Cone::from_generators(2, &[v(&[1, 0]), v(&[0, 1])], &[]);
        assert_eq!(c.rays().len(), 2);
        assert!(c.is_pointed());
        assert_eq!(c.space_dim(), 2);
        assert!(c.contains_point(&v(&[3, 5])));
        assert!(!c.contains_point(&v(&[-1, 5])));
        assert!(c.relint_contains_point(&v(&[1, 1])));
        assert!(!c.relint_contains_point(&v(&[1, 0])));
    }

    #[test]
    fn redundant_generator_dropped() {
        let c = Cone::from_generators(2, &[v(&[1, 0]), v(&[1, 1]), v(&[0, 1])], &[]);
        assert_eq!(c.rays().len(), 2);
        assert_eq!(c.rays(), &[v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn halfplane_has_lineality() {
        let c = Cone::from_generators(2, &[v(&[1, 0])], &[v(&[0, 1])]);
        assert!(!c.is_pointed());
        assert_eq!(c.lineality().len(), 1);
        assert_eq!(c.rays().len(), 1);
        assert!(c.contains_point(&v(&[2, -7])));
        assert!(!c.contains_point(&v(&[-1, 0])));
        // canonical ray representative is lineality-orthogonal
        assert_eq!(c.rays()[0], v(&[1, 0]));
        // the same halfplane from a skew generator compares equal
        let c2 = Cone::from_generators(2, &[v(&[3, 5])], &[v(&[0, 1])]);
        assert_eq!(c, c2);
    }

    #[test]
    fn zero_and_full() {
        let z = Cone::zero(3);
        assert!(z.is_zero());
        assert!(z.contains_point(&v(&[0, 0, 0])));
        assert!(!z.contains_point(&v(&[1, 0, 0])));
        assert!(z.relint_contains_point(&v(&[0, 0, 0])));
        let full = Cone::from_generators(
            3,
            &[],
            &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])],
        );
        assert_eq!(full.space_dim(), 3);
        assert!(full.contains_point(&v(&[-5, 2, 9])));
        assert!(full.relint_contains_point(&v(&[0, 0, 0])));
        // a linear subspace has no proper faces
        assert!(!z.is_face_of(&full));
    }

    #[test]
    fn intersect_simplicial() {
        let a = Cone::from_generators(2, &[v(&[1, 0]), v(&[1, 2])], &[]);
        let b = Cone::from_generators(2, &[v(&[2, 1]), v(&[0, 1])], &[]);
        let k = a.intersect(&b);
        assert_eq!(k.rays(), &[v(&[1, 2]), v(&[2, 1])]);
    }

    #[test]
    fn relint_meets_behaviour() {
        let quad = Cone::from_generators(2, &[v(&[1, 0]), v(&[0, 1])], &[]);
        let diag = Cone::from_generators(2, &[v(&[1, 1])], &[]);
        let edge = Cone::from_generators(2, &[v(&[1, 0])], &[]);
        assert!(quad.relint_meets(&diag));
        assert!(!quad.relint_meets(&edge));
        // a ray's relative interior misses a cone touching it only at 0
        let other = Cone::from_generators(2, &[v(&[0, 1])], &[]);
        assert!(!edge.relint_meets(&other));
        // but {0} meets everything
        assert!(Cone::zero(2).relint_meets(&other));
    }

    #[test]
    fn face_relation() {
        let c = Cone::from_generators(3, &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])], &[]);
        let edge = Cone::from_generators(3, &[v(&[1, 0, 0])], &[]);
        let facet = Cone::from_generators(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])], &[]);
        let inner = Cone::from_generators(3, &[v(&[1, 1, 1])], &[]);
        assert!(edge.is_face_of(&c));
        assert!(facet.is_face_of(&c));
        assert!(c.is_face_of(&c));
        assert!(Cone::zero(3).is_face_of(&c));
        assert!(!inner.is_face_of(&c));
        assert!(inner.is_face_of(&inner));
        assert_eq!(c.faces().len(), 8);
    }

    #[test]
    fn double_polar_is_identity() {
        // V -> H -> V round trip reproduces the cone
        let cones = vec![
            Cone::from_generators(3, &[v(&[2, 1, 0]), v(&[0, 1, 0]), v(&[1, 1, 3])], &[]),
            Cone::from_generators(3, &[v(&[1, 0, 0])], &[v(&[0, 0, 1])]),
            Cone::from_generators(3, &[], &[v(&[1, 2, 3])]),
        ];
        for c in cones {
            let again = Cone::from_supports(3, c.span_equations(), c.facets());
            assert_eq!(c, again);
        }
    }

    #[test]
    fn dim_zero_ambient() {
        let z = Cone::from_generators(0, &[], &[]);
        assert!(z.is_zero());
        assert_eq!(z.space_dim(), 0);
        assert!(z.contains_point(&[]));
        assert!(z.relint_contains_point(&[]));
        let z2 = Cone::zero(0);
        assert_eq!(z, z2);
        assert!(z.relint_meets(&z2));
        assert!(z.is_face_of(&z2));
    }

    #[test]
    fn degree_space_cone_dim8() {
        // a mid-dimensional sanity check for the double description engine
        let mut gens = Vec::new();
        for i in 0..8 {
            let mut e = vec![0i64; 8];
            e[i] = 1;
            if i > 0 {
                e[i - 1] = -1;
            }
            gens.push(v(&e));
        }
        gens.push(v(&[1, 1, 1, 1, 1, 1, 1, 1]));
        let c = Cone::from_generators(8, &gens, &[]);
        assert_eq!(c.space_dim(), 8);
        for g in &gens {
            assert!(c.contains_point(g));
        }
    }
}
