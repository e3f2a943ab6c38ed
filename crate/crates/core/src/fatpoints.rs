//! Fat point schemes on the conic `xz = y²` and the linear algebra of their
//! ideals.
//!
//! A form of degree `d` lies in `I_q^m` iff all its partial derivatives of
//! order `m - 1` vanish at `q` (lower orders follow from Euler's identity as
//! long as `p > d`). For `d < m - 1` every operator of order `d` is used
//! instead, which forces the form to be zero. The condition matrix stacks
//! these evaluations for every point; its kernel is `(I^(m))_d`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactalg::{FFElement, FFMatrix, PrimeField};
use crate::exec::Execution;
use crate::monomials::{monomials_of_degree, Monomial};

/// A point of the projective plane, normalized so its first nonzero
/// coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: [FFElement; 3],
}

impl ProjectivePoint {
    pub fn new(field: &PrimeField, coords: [FFElement; 3]) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::DegenerateInput("point with all coordinates zero".into()))?;
        let inv = field.inv(*lead)?;
        Ok(ProjectivePoint { coords: coords.map(|c| field.mul(c, inv)) })
    }

    /// `(1 : t : t²)`.
    pub fn on_conic(field: &PrimeField, t: FFElement) -> Self {
        ProjectivePoint { coords: [FFElement::ONE, t, field.mul(t, t)] }
    }

    pub fn coords(&self) -> [FFElement; 3] {
        self.coords
    }

    pub fn satisfies_conic(&self, field: &PrimeField) -> bool {
        let [x, y, z] = self.coords;
        field.mul(x, z) == field.mul(y, y)
    }

    /// Image under the linear map `g` acting on coordinate vectors.
    pub fn transform(&self, field: &PrimeField, g: &[[FFElement; 3]; 3]) -> Result<Self> {
        let image = g.map(|row| {
            row.iter().zip(self.coords).fold(FFElement::ZERO, |acc, (&a, b)| field.add(acc, field.mul(a, b)))
        });
        ProjectivePoint::new(field, image)
    }
}

/// Serialized form of a uniform configuration on the conic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigRecord {
    pub prime: u32,
    pub r: u32,
    pub m: u32,
    pub seed: u64,
    pub t_values: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPointConfig {
    field: PrimeField,
    points: Vec<ProjectivePoint>,
    multiplicities: Vec<u32>,
    conic_params: Vec<FFElement>,
    seed: u64,
}

/// Draws `r` distinct parameters `t` and returns the points `(1 : t : t²)`.
pub fn conic_points(r: u32, seed: u64, field: &PrimeField) -> Result<(Vec<FFElement>, Vec<ProjectivePoint>)> {
    if r < 2 {
        return Err(Error::DegenerateInput(format!("need at least 2 points, got r={r}")));
    }
    if r >= field.prime() {
        return Err(Error::DegenerateInput(format!("cannot draw {r} distinct parameters from GF({})", field.prime())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut params = Vec::with_capacity(r as usize);
    while params.len() < r as usize {
        let t = rng.gen_range(0..field.prime());
        if seen.insert(t) {
            params.push(field.element(t as u64));
        }
    }
    let points = params.iter().map(|&t| ProjectivePoint::on_conic(field, t)).collect();
    Ok((params, points))
}

impl FatPointConfig {
    /// `r` seeded points on `xz = y²`, each with multiplicity `m`.
    pub fn on_conic(r: u32, m: u32, seed: u64, field: PrimeField) -> Result<Self> {
        if m == 0 {
            return Err(Error::DegenerateInput("multiplicity must be at least 1".into()));
        }
        let (conic_params, points) = conic_points(r, seed, &field)?;
        Ok(FatPointConfig { field, multiplicities: vec![m; points.len()], points, conic_params, seed })
    }

    /// Arbitrary points with arbitrary multiplicities, for probing.
    pub fn new(field: PrimeField, points: Vec<ProjectivePoint>, multiplicities: Vec<u32>) -> Result<Self> {
        if points.is_empty() || points.len() != multiplicities.len() {
            return Err(Error::DegenerateInput("need one multiplicity per point".into()));
        }
        if multiplicities.contains(&0) {
            return Err(Error::DegenerateInput("multiplicity must be at least 1".into()));
        }
        let distinct: HashSet<_> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::DegenerateInput("points are not distinct".into()));
        }
        Ok(FatPointConfig { field, points, multiplicities, conic_params: Vec::new(), seed: 0 })
    }

    pub fn from_record(rec: &ConfigRecord) -> Result<Self> {
        let field = PrimeField::new(rec.prime)?;
        if rec.t_values.len() != rec.r as usize {
            return Err(Error::DegenerateInput("t_values length differs from r".into()));
        }
        let params: Vec<FFElement> = rec.t_values.iter().map(|&t| field.element(t as u64)).collect();
        let points = params.iter().map(|&t| ProjectivePoint::on_conic(&field, t)).collect();
        let mut cfg = FatPointConfig::new(field, points, vec![rec.m; rec.r as usize])?;
        cfg.conic_params = params;
        cfg.seed = rec.seed;
        Ok(cfg)
    }

    /// `None` unless the multiplicities are uniform.
    pub fn record(&self) -> Option<ConfigRecord> {
        Some(ConfigRecord {
            prime: self.field.prime(),
            r: self.r(),
            m: self.uniform_multiplicity()?,
            seed: self.seed,
            t_values: self.conic_params.iter().map(|t| t.value()).collect(),
        })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn conic_params(&self) -> &[FFElement] {
        &self.conic_params
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn r(&self) -> u32 {
        self.points.len() as u32
    }

    pub fn uniform_multiplicity(&self) -> Option<u32> {
        let first = self.multiplicities[0];
        self.multiplicities.iter().all(|&m| m == first).then_some(first)
    }

    /// Degree of the scheme: `Σ m_q (m_q + 1) / 2`.
    pub fn scheme_degree(&self) -> usize {
        self.multiplicities.iter().map(|&m| (m as usize) * (m as usize + 1) / 2).sum()
    }

    /// Same multiplicities at the images of the points under `g`.
    pub fn transformed(&self, g: &[[FFElement; 3]; 3]) -> Result<Self> {
        let points = self.points.iter().map(|q| q.transform(&self.field, g)).collect::<Result<Vec<_>>>()?;
        let mut cfg = FatPointConfig::new(self.field, points, self.multiplicities.clone())
            .map_err(|_| Error::GenericityFailure("coordinate change is singular".into()))?;
        cfg.conic_params = self.conic_params.clone();
        cfg.seed = self.seed;
        Ok(cfg)
    }
}

fn falling_factorial(n: u32, k: u32) -> u64 {
    (0..k).map(|i| (n - i) as u64).product()
}

/// Rows: derivative conditions at each point; columns: degree-`d` monomials
/// in descending degrevlex.
pub fn condition_matrix(cfg: &FatPointConfig, d: u32) -> Result<FFMatrix<Monomial>> {
    let field = cfg.field;
    if field.prime() <= d {
        return Err(Error::CharacteristicHazard { prime: field.prime(), degree: d });
    }
    let columns = monomials_of_degree(d, 3);
    let mut rows: Vec<Vec<FFElement>> = Vec::new();
    for (q, &mult) in cfg.points.iter().zip(&cfg.multiplicities) {
        let powers: Vec<Vec<FFElement>> =
            q.coords().iter().map(|&c| (0..=d).map(|e| field.pow(c, e as u64)).collect()).collect();
        let order = (mult - 1).min(d);
        for op in monomials_of_degree(order, 3) {
            let row = columns
                .iter()
                .map(|mon| {
                    if !op.divides(mon) {
                        return FFElement::ZERO;
                    }
                    let coeff = falling_factorial(mon.x, op.x)
                        * falling_factorial(mon.y, op.y)
                        * falling_factorial(mon.z, op.z);
                    let value = field.mul(
                        field.mul(powers[0][(mon.x - op.x) as usize], powers[1][(mon.y - op.y) as usize]),
                        powers[2][(mon.z - op.z) as usize],
                    );
                    field.mul(field.element(coeff), value)
                })
                .collect();
            rows.push(row);
        }
    }
    FFMatrix::from_rows(columns, &rows)
}

/// `dim (I^(m))_d`.
pub fn hilbert_function(cfg: &FatPointConfig, d: u32) -> Result<usize> {
    let total = ((d + 1) * (d + 2) / 2) as usize;
    Ok(total - quotient_hilbert_function(cfg, d)?)
}

/// `dim (R/I^(m))_d`, the rank of the condition matrix.
pub fn quotient_hilbert_function(cfg: &FatPointConfig, d: u32) -> Result<usize> {
    Ok(condition_matrix(cfg, d)?.row_reduce(cfg.field()).rank)
}

/// `dim (R/I^(m))_d` for `d = 0..=max_degree`, degrees evaluated independently.
pub fn quotient_hilbert_sweep(cfg: &FatPointConfig, max_degree: u32, exec: Execution) -> Result<Vec<usize>> {
    exec.try_map((0..=max_degree).collect(), |d| quotient_hilbert_function(cfg, d))
}

/// Basis of `(I^(m))_d` as coefficient vectors against
/// `monomials_of_degree(d, 3)`.
pub fn symbolic_power_basis(cfg: &FatPointConfig, d: u32) -> Result<Vec<Vec<FFElement>>> {
    Ok(condition_matrix(cfg, d)?.row_reduce(cfg.field()).kernel_basis)
}
