//! Fans of pointed rational cones and the fan pipeline attached to a
//! defining datum: the tropical fan carried by the arms, the ambient fan
//! selected by admissible orthant faces, coarsest common refinements,
//! minimal regular subdivision of two-dimensional cones, and Gale-dual
//! bunches in the degree space.

pub mod cone;

use std::collections::BTreeSet;

use num::{Integer, One, Signed, Zero};
use thiserror::Error;

pub use cone::Cone;

use crate::lattice::{cokernel, primitive, saturation_basis, Int, IntMatrix};
use crate::ringdata::C1Data;

/// Guard for the orthant face enumerations; overridable through the CLI.
pub const DEFAULT_FACE_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanError {
    #[error("MissingD: fan operations need the stack matrix rows d")]
    MissingD,
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("FaceCapExceeded: enumeration over {vars} variables exceeds the cap {cap}")]
    FaceCapExceeded { vars: usize, cap: usize },
    #[error("DegenerateCone: {0}")]
    DegenerateCone(String),
    #[error("UnsupportedDimension: regular subdivision handles maximal cones of dimension <= 2, got {0}")]
    UnsupportedDimension(usize),
    #[error("RayMismatch: the fan rays do not coincide with the matrix columns")]
    RayMismatch,
}

/// How "the image comprises a cone of the bunch" is tested.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum ComprisesReading {
    /// Some bunch cone is contained in the image cone.
    #[default]
    Containment,
    /// Some bunch cone has its relative interior inside the relative
    /// interior of the image cone.
    RelativeInterior,
}

/// A collection of cones sharing an ambient lattice; the stored cones are
/// the maximal ones, faces are recovered on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    cones: Vec<Cone>,
}

impl Fan {
    /// Keep only inclusion-maximal cones, after deduplication.
    pub fn new(dim: usize, cones: Vec<Cone>) -> Fan {
        assert!(cones.iter().all(|c| c.ambient_dim() == dim));
        let mut unique: Vec<Cone> = Vec::new();
        for c in cones {
            if !unique.contains(&c) {
                unique.push(c);
            }
        }
        let maximal: Vec<Cone> = unique
            .iter()
            .filter(|c| {
                !unique
                    .iter()
                    .any(|other| *other != **c && other.contains_cone(c))
            })
            .cloned()
            .collect();
        Fan {
            dim,
            cones: maximal,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn maximal_cones(&self) -> &[Cone] {
        &self.cones
    }

    /// All rays of the stored cones, primitive, sorted, deduplicated.
    pub fn rays(&self) -> Vec<Vec<Int>> {
        let mut out: Vec<Vec<Int>> = self
            .cones
            .iter()
            .flat_map(|c| c.rays().iter().cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Membership of a cone in the fan: it must be a face of some stored
    /// maximal cone.
    pub fn has_member(&self, c: &Cone) -> bool {
        self.cones.iter().any(|sigma| c.is_face_of(sigma))
    }

    /// Fan soundness: pairwise intersections of maximal cones are faces
    /// of both. Used by tests and debug checks.
    pub fn is_valid(&self) -> bool {
        for (i, a) in self.cones.iter().enumerate() {
            for b in self.cones.iter().skip(i + 1) {
                let k = a.intersect(b);
                if !k.is_face_of(a) || !k.is_face_of(b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn support_contains(&self, x: &[Int]) -> bool {
        self.cones.iter().any(|c| c.contains_point(x))
    }
}

/// A bunch: cones in the rational degree space of a grading.
#[derive(Clone, Debug)]
pub struct Bunch {
    rank: usize,
    cones: Vec<Cone>,
}

impl Bunch {
    pub fn new(rank: usize, cones: Vec<Cone>) -> Bunch {
        assert!(cones.iter().all(|c| c.ambient_dim() == rank));
        let mut unique: Vec<Cone> = Vec::new();
        for c in cones {
            if !unique.contains(&c) {
                unique.push(c);
            }
        }
        Bunch {
            rank,
            cones: unique,
        }
    }

    /// The trivial bunch `{{0}}` describing the affine situation.
    pub fn trivial(rank: usize) -> Bunch {
        Bunch::new(rank, vec![Cone::zero(rank)])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn contains_zero_cone(&self) -> bool {
        self.cones.iter().any(Cone::is_zero)
    }
}

impl PartialEq for Bunch {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.cones.len() == other.cones.len()
            && self.cones.iter().all(|c| other.cones.contains(c))
    }
}

impl Eq for Bunch {}

/// Arm data of the stack matrix: for every block the list of its column
/// indices; the first one spans the arm of the tropical fan.
fn arm_columns(data: &C1Data) -> Vec<Vec<usize>> {
    let sizes = data.block_sizes();
    let mut out = Vec::with_capacity(sizes.len());
    let mut col = 0;
    for size in sizes {
        out.push((col..col + size).collect());
        col += size;
    }
    out
}

/// The tropical fan: one maximal cone per arm, spanned by the arm ray
/// plus the lineality of the last `s` coordinates.
pub fn tropical_fan(data: &C1Data) -> Result<Fan, FanError> {
    let p = data.p_matrix().ok_or(FanError::MissingD)?;
    let dim = p.rows();
    let r = data.r();
    let s = data.s();
    let lin: Vec<Vec<Int>> = (r..r + s)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::one();
            e
        })
        .collect();
    let mut cones = Vec::new();
    for cols in arm_columns(data) {
        let lambda = Cone::from_generators(dim, &[p.col(cols[0])], &lin);
        // every column of the arm lies in its cone
        for &j in &cols {
            debug_assert!(lambda.contains_point(&p.col(j)), "arm column escapes its cone");
        }
        cones.push(lambda);
    }
    Ok(Fan::new(dim, cones))
}

fn check_cap(vars: usize, cap: usize) -> Result<(), FanError> {
    if vars > cap {
        Err(FanError::FaceCapExceeded { vars, cap })
    } else {
        Ok(())
    }
}

/// Degree columns of the grading of the stack matrix, in the free part of
/// the degree space.
fn degree_columns(p: &IntMatrix) -> (usize, Vec<Vec<Int>>) {
    let (group, q) = cokernel(&p.transpose());
    let rank = group.free_rank();
    let cols = (0..p.cols()).map(|j| q.degree(j).free.clone()).collect();
    (rank, cols)
}

fn subset_cone(dim: usize, cols: &[Vec<Int>], pick: impl Iterator<Item = usize>) -> Cone {
    let gens: Vec<Vec<Int>> = pick.map(|j| cols[j].clone()).collect();
    Cone::from_generators(dim, &gens, &[])
}

fn comprises(image: &Cone, phi: &Bunch, reading: ComprisesReading) -> bool {
    phi.cones().iter().any(|tau| match reading {
        ComprisesReading::Containment => image.contains_cone(tau),
        ComprisesReading::RelativeInterior => tau.relint_within(image),
    })
}

/// Admissible faces of the positive orthant, as index subsets of the
/// columns: the image of the face meets the tropical fan in its relative
/// interior, and the complementary degree cone comprises a bunch cone.
pub fn admissible_faces(
    data: &C1Data,
    phi: &Bunch,
    reading: ComprisesReading,
    cap: usize,
) -> Result<Vec<Vec<usize>>, FanError> {
    let p = data.p_matrix().ok_or(FanError::MissingD)?;
    let nm = p.cols();
    check_cap(nm, cap)?;
    let trop = tropical_fan(data)?;
    let (rank, degs) = degree_columns(&p);
    if phi.rank() != rank {
        return Err(FanError::DimensionMismatch(format!(
            "bunch lives in rank {} but the degree space has rank {}",
            phi.rank(),
            rank
        )));
    }
    let pcols: Vec<Vec<Int>> = (0..nm).map(|j| p.col(j)).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << nm) {
        let picked: Vec<usize> = (0..nm).filter(|j| mask & (1 << j) != 0).collect();
        let image = subset_cone(p.rows(), &pcols, picked.iter().copied());
        let meets_trop = trop
            .maximal_cones()
            .iter()
            .any(|lambda| image.relint_meets(lambda));
        if !meets_trop {
            continue;
        }
        let qcone = subset_cone(rank, &degs, (0..nm).filter(|j| !picked.contains(j)));
        if comprises(&qcone, phi, reading) {
            out.push(picked);
        }
    }
    Ok(out)
}

/// The ambient fan: faces of the images of the admissible orthant faces.
/// Stored are the maximal images; every face is recoverable on demand.
pub fn ambient_fan(
    data: &C1Data,
    phi: &Bunch,
    reading: ComprisesReading,
    cap: usize,
) -> Result<Fan, FanError> {
    let p = data.p_matrix().ok_or(FanError::MissingD)?;
    let pcols: Vec<Vec<Int>> = (0..p.cols()).map(|j| p.col(j)).collect();
    let faces = admissible_faces(data, phi, reading, cap)?;
    let cones: Vec<Cone> = faces
        .iter()
        .map(|f| subset_cone(p.rows(), &pcols, f.iter().copied()))
        .collect();
    Ok(Fan::new(p.rows(), cones))
}

/// Coarsest common refinement of a fan with the tropical fan: pairwise
/// intersections of maximal cones, inclusion-maximal ones kept.
pub fn refine_with_tropical(sigma: &Fan, trop: &Fan) -> Result<Fan, FanError> {
    if sigma.ambient_dim() != trop.ambient_dim() {
        return Err(FanError::DimensionMismatch(format!(
            "fan in dimension {} refined against dimension {}",
            sigma.ambient_dim(),
            trop.ambient_dim()
        )));
    }
    let mut cones = Vec::new();
    for a in sigma.maximal_cones() {
        for b in trop.maximal_cones() {
            cones.push(a.intersect(b));
        }
    }
    Ok(Fan::new(sigma.ambient_dim(), cones))
}

fn det2(a: &[Int; 2], b: &[Int; 2]) -> Int {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Minimal smooth insertion between two primitive plane vectors spanning
/// a pointed two-dimensional cone, by the continued-fraction scheme:
/// repeatedly insert the lattice point closest to the swept boundary.
pub fn hj_insertions_2d(a: &[Int; 2], b: &[Int; 2]) -> Result<Vec<[Int; 2]>, FanError> {
    let d = det2(a, b);
    if d.is_zero() {
        return Err(FanError::DegenerateCone(
            "proportional rays span no two-dimensional cone".into(),
        ));
    }
    if d.is_negative() {
        let mut rev = hj_insertions_2d(b, a)?;
        rev.reverse();
        return Ok(rev);
    }
    let mut out = Vec::new();
    let mut u = a.clone();
    loop {
        let dd = det2(&u, b);
        if dd.is_one() {
            return Ok(out);
        }
        // solve det(u, x0) = u0*x1 - u1*x0 = 1
        let eg = u[0].extended_gcd(&u[1]);
        debug_assert!(eg.gcd.is_one(), "chain members stay primitive");
        let x0 = [-eg.y.clone(), eg.x.clone()];
        let t = (-det2(&x0, b)).div_ceil(&dd);
        let v = [&x0[0] + &t * &u[0], &x0[1] + &t * &u[1]];
        debug_assert!(det2(&u, &v).is_one());
        debug_assert!(det2(&v, b).is_positive());
        out.push(v.clone());
        u = v;
    }
}

/// Minimal smooth insertion between two rays spanning a pointed plane
/// cone inside an ambient lattice; `plane` must be a lattice basis of the
/// saturated plane through the rays.
pub fn hirzebruch_jung(
    a: &[Int],
    b: &[Int],
    plane: &[Vec<Int>],
) -> Result<Vec<Vec<Int>>, FanError> {
    if plane.len() != 2 {
        return Err(FanError::DegenerateCone(
            "plane lattice basis must have two members".into(),
        ));
    }
    let coords = |v: &[Int]| -> Result<[Int; 2], FanError> {
        let mut m = IntMatrix::zeros(v.len(), 2);
        for (j, bv) in plane.iter().enumerate() {
            for (i, x) in bv.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        let sol = crate::lattice::solve_integer(&m, v).ok_or_else(|| {
            FanError::DegenerateCone("ray is not a lattice point of the given plane".into())
        })?;
        Ok([sol[0].clone(), sol[1].clone()])
    };
    let a2 = coords(a)?;
    let b2 = coords(b)?;
    let inserted = hj_insertions_2d(&a2, &b2)?;
    Ok(inserted
        .into_iter()
        .map(|c| {
            let v: Vec<Int> = plane[0]
                .iter()
                .zip(&plane[1])
                .map(|(p0, p1)| &c[0] * p0 + &c[1] * p1)
                .collect();
            v
        })
        .collect())
}

/// Minimal regular subdivision of a fan whose maximal cones have
/// dimension at most two. Rays and lower-dimensional cones pass through.
pub fn regular_subdivision(sigma: &Fan) -> Result<Fan, FanError> {
    let dim = sigma.ambient_dim();
    let mut cones: Vec<Cone> = Vec::new();
    for c in sigma.maximal_cones() {
        match c.space_dim() {
            0 | 1 => {
                if !c.is_pointed() {
                    return Err(FanError::DegenerateCone(
                        "fan cones must be pointed".into(),
                    ));
                }
                cones.push(c.clone());
            }
            2 => {
                if !c.is_pointed() {
                    return Err(FanError::DegenerateCone(
                        "two-dimensional cone with a lineality line".into(),
                    ));
                }
                let rays = c.rays();
                debug_assert_eq!(rays.len(), 2);
                let plane = saturation_basis(&[rays[0].clone(), rays[1].clone()])
                    .map_err(|e| FanError::DegenerateCone(e.to_string()))?;
                let inserted = hirzebruch_jung(&rays[0], &rays[1], &plane)?;
                let mut chain = vec![rays[0].clone()];
                chain.extend(inserted);
                chain.push(rays[1].clone());
                for pair in chain.windows(2) {
                    cones.push(Cone::from_generators(
                        dim,
                        &[pair[0].clone(), pair[1].clone()],
                        &[],
                    ));
                }
            }
            d => return Err(FanError::UnsupportedDimension(d)),
        }
    }
    Ok(Fan::new(dim, cones))
}

/// The Gale-dual bunch of a fan whose rays are exactly the columns of the
/// matrix: images of complementary degree columns over the orthant faces
/// whose column cone is a member of the fan.
pub fn gale_dual_bunch(p: &IntMatrix, sigma: &Fan, cap: usize) -> Result<Bunch, FanError> {
    let nm = p.cols();
    check_cap(nm, cap)?;
    let cols: Vec<Vec<Int>> = (0..nm).map(|j| p.col(j)).collect();
    let mut prim_cols: Vec<Vec<Int>> = cols
        .iter()
        .map(|c| primitive(c).map_err(|_| FanError::RayMismatch))
        .collect::<Result<_, _>>()?;
    prim_cols.sort();
    prim_cols.dedup();
    if prim_cols != sigma.rays() {
        return Err(FanError::RayMismatch);
    }
    let (rank, degs) = degree_columns(p);
    let mut member_faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    member_faces.insert(Vec::new());
    for sigma_max in sigma.maximal_cones() {
        let inside: Vec<usize> = (0..nm)
            .filter(|&j| sigma_max.contains_point(&cols[j]))
            .collect();
        check_cap(inside.len(), cap)?;
        for mask in 1u64..(1u64 << inside.len()) {
            let picked: Vec<usize> = (0..inside.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| inside[i])
                .collect();
            if member_faces.contains(&picked) {
                continue;
            }
            let image = subset_cone(p.rows(), &cols, picked.iter().copied());
            if image.is_face_of(sigma_max) {
                member_faces.insert(picked);
            }
        }
    }
    let cones: Vec<Cone> = member_faces
        .iter()
        .map(|f| subset_cone(rank, &degs, (0..nm).filter(|j| !f.contains(j))))
        .collect();
    Ok(Bunch::new(rank, cones))
}

/// Inverse of the Gale construction: the fan generated by the images of
/// the orthant faces whose complementary degree cone comprises a bunch
/// cone. Used to round-trip a fan through its bunch.
pub fn fan_from_bunch(
    p: &IntMatrix,
    phi: &Bunch,
    reading: ComprisesReading,
    cap: usize,
) -> Result<Fan, FanError> {
    let nm = p.cols();
    check_cap(nm, cap)?;
    let cols: Vec<Vec<Int>> = (0..nm).map(|j| p.col(j)).collect();
    let (rank, degs) = degree_columns(p);
    if phi.rank() != rank {
        return Err(FanError::DimensionMismatch(format!(
            "bunch rank {} against degree space rank {}",
            phi.rank(),
            rank
        )));
    }
    let mut cones = Vec::new();
    for mask in 0u64..(1u64 << nm) {
        let picked: Vec<usize> = (0..nm).filter(|j| mask & (1 << j) != 0).collect();
        let qcone = subset_cone(rank, &degs, (0..nm).filter(|j| !picked.contains(j)));
        if comprises(&qcone, phi, reading) {
            cones.push(subset_cone(p.rows(), &cols, picked.iter().copied()));
        }
    }
    Ok(Fan::new(p.rows(), cones))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringdata::fixtures::e6;

    fn v(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn tropical_fan_e6() {
        let trop = tropical_fan(&e6()).unwrap();
        assert_eq!(trop.maximal_cones().len(), 3);
        for lambda in trop.maximal_cones() {
            assert_eq!(lambda.space_dim(), 2);
            assert_eq!(lambda.lineality().len(), 1);
            assert!(lambda.contains_point(&v(&[0, 0, 1])));
            assert!(lambda.contains_point(&v(&[0, 0, -5])));
        }
        let arm0 = Cone::from_generators(3, &[v(&[-3, -3, -2])], &[v(&[0, 0, 1])]);
        assert!(trop.maximal_cones().contains(&arm0));
    }

    #[test]
    fn admissible_faces_e6_affine() {
        // brute-force relative-interior analysis fixes the admissible set:
        // the empty face, the three singletons, and the full face.
        let data = e6();
        let phi = Bunch::trivial(0);
        let faces =
            admissible_faces(&data, &phi, ComprisesReading::Containment, DEFAULT_FACE_CAP)
                .unwrap();
        let expect: Vec<Vec<usize>> =
            vec![vec![], vec![0], vec![1], vec![2], vec![0, 1, 2]];
        assert_eq!(faces, expect);
    }

    #[test]
    fn ambient_fan_e6_is_full_cone() {
        let data = e6();
        let p = data.p_matrix().unwrap();
        let phi = Bunch::trivial(0);
        let sigma =
            ambient_fan(&data, &phi, ComprisesReading::Containment, DEFAULT_FACE_CAP).unwrap();
        assert_eq!(sigma.maximal_cones().len(), 1);
        assert_eq!(sigma.maximal_cones()[0].space_dim(), 3);
        // rays of the fan are exactly the columns
        let mut cols: Vec<Vec<Int>> = (0..3).map(|j| p.col(j)).collect();
        cols.sort();
        assert_eq!(sigma.rays(), cols);
        assert!(sigma.is_valid());
    }

    #[test]
    fn refine_e6_gives_three_plane_cones() {
        let data = e6();
        let phi = Bunch::trivial(0);
        let sigma =
            ambient_fan(&data, &phi, ComprisesReading::Containment, DEFAULT_FACE_CAP).unwrap();
        let trop = tropical_fan(&data).unwrap();
        let refined = refine_with_tropical(&sigma, &trop).unwrap();
        assert_eq!(refined.maximal_cones().len(), 3);
        for c in refined.maximal_cones() {
            assert_eq!(c.space_dim(), 2);
            assert!(c.is_pointed());
            assert!(c.contains_point(&v(&[0, 0, 1])));
        }
        let arm1 = Cone::from_generators(3, &[v(&[3, 0, 1]), v(&[0, 0, 1])], &[]);
        assert!(refined.maximal_cones().contains(&arm1));
        assert!(refined.is_valid());
    }

    #[test]
    fn refine_keeps_fan_supported_on_tropical() {
        // a fan already supported on the tropical fan refines to itself
        let data = e6();
        let trop = tropical_fan(&data).unwrap();
        let arm = Cone::from_generators(3, &[v(&[3, 0, 1]), v(&[0, 0, 1])], &[]);
        let sigma = Fan::new(3, vec![arm.clone()]);
        let refined = refine_with_tropical(&sigma, &trop).unwrap();
        assert_eq!(refined.maximal_cones(), &[arm]);
    }

    #[test]
    fn hj_basic_insertions() {
        let a = [Int::from(1), Int::from(0)];
        let b = [Int::from(1), Int::from(2)];
        assert_eq!(
            hj_insertions_2d(&a, &b).unwrap(),
            vec![[Int::from(1), Int::from(1)]]
        );
        let b1 = [Int::from(0), Int::from(1)];
        assert!(hj_insertions_2d(&a, &b1).unwrap().is_empty());
        let err = hj_insertions_2d(&a, &[Int::from(2), Int::from(0)]);
        assert!(matches!(err, Err(FanError::DegenerateCone(_))));
    }

    #[test]
    fn hj_e6_arm() {
        // frozen against the parallelogram oracle in the integration suite
        let plane = saturation_basis(&[v(&[3, 0, 1]), v(&[0, 0, 1])]).unwrap();
        let inserted = hirzebruch_jung(&v(&[3, 0, 1]), &v(&[0, 0, 1]), &plane).unwrap();
        assert_eq!(inserted, vec![v(&[2, 0, 1]), v(&[1, 0, 1])]);
    }

    #[test]
    fn regular_subdivision_e6() {
        let data = e6();
        let phi = Bunch::trivial(0);
        let sigma =
            ambient_fan(&data, &phi, ComprisesReading::Containment, DEFAULT_FACE_CAP).unwrap();
        let trop = tropical_fan(&data).unwrap();
        let refined = refine_with_tropical(&sigma, &trop).unwrap();
        let smooth = regular_subdivision(&refined).unwrap();
        let mut expect = vec![
            v(&[-3, -3, -2]),
            v(&[-2, -2, -1]),
            v(&[-1, -1, 0]),
            v(&[3, 0, 1]),
            v(&[2, 0, 1]),
            v(&[1, 0, 1]),
            v(&[0, 2, 1]),
            v(&[0, 1, 1]),
            v(&[0, 0, 1]),
        ];
        expect.sort();
        assert_eq!(smooth.rays(), expect);
        assert!(smooth.is_valid());
        // subdividing a smooth fan changes nothing
        let again = regular_subdivision(&smooth).unwrap();
        assert_eq!(again.rays(), smooth.rays());
        assert_eq!(again.maximal_cones().len(), smooth.maximal_cones().len());
    }

    #[test]
    fn gale_trivial_bunch_for_full_rank_p() {
        // K has rank 0, so the bunch collapses to the zero cone
        let data = e6();
        let p = data.p_matrix().unwrap();
        let phi = Bunch::trivial(0);
        let sigma =
            ambient_fan(&data, &phi, ComprisesReading::Containment, DEFAULT_FACE_CAP).unwrap();
        let bunch = gale_dual_bunch(&p, &sigma, DEFAULT_FACE_CAP).unwrap();
        assert_eq!(bunch.rank(), 0);
        assert!(bunch.contains_zero_cone());
    }

    #[test]
    fn gale_rejects_ray_mismatch() {
        let data = e6();
        let p = data.p_matrix().unwrap();
        let wrong = Fan::new(
            3,
            vec![Cone::from_generators(3, &[v(&[1, 0, 0])], &[])],
        );
        assert_eq!(
            gale_dual_bunch(&p, &wrong, DEFAULT_FACE_CAP),
            Err(FanError::RayMismatch)
        );
    }

    #[test]
    fn face_cap_guard() {
        let data = e6();
        let phi = Bunch::trivial(0);
        let err = admissible_faces(&data, &phi, ComprisesReading::Containment, 2);
        assert!(matches!(err, Err(FanError::FaceCapExceeded { .. })));
    }
}
