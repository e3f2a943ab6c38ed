//! Reverse-lex generic initial ideals of `I^(m)`.
//!
//! Two independent routes produce the same [`GinStaircase`]:
//!
//! - [`generic_gin`] moves the points by random invertible matrices, takes
//!   the pivot monomials of each row-reduced degree-`d` basis of the moved
//!   ideal and prunes them to minimal generators. Trials must agree.
//! - [`staircase_from_hilbert`] rebuilds the staircase from the h-vector of
//!   the artinian reduction: a strongly stable ideal of `k[x, y]` is a lex
//!   segment in every degree, so `x^a y^b` is a standard monomial exactly
//!   when `a < h(a + b)`, giving `λ_a = #{e : h(e) > a}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{FFElement, FFMatrix, PrimeField};
use crate::exec::Execution;
use crate::fatpoints::{quotient_hilbert_sweep, symbolic_power_basis, FatPointConfig};
use crate::monomials::{is_strongly_stable, minimal_generators, monomials_of_degree, Monomial, MonomialSet};
use crate::resolutions::predicted_extremal_shifts;

/// Monomial ideal `(x^α, x^{α-1} y^{λ_{α-1}}, …, x y^{λ_1}, y^{λ_0})` with
/// `λ_0 > λ_1 > … > λ_{α-1} ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawStaircase")]
pub struct GinStaircase {
    alpha: u32,
    lambdas: Vec<u32>,
}

#[derive(Deserialize)]
struct RawStaircase {
    alpha: u32,
    lambdas: Vec<u32>,
}

impl TryFrom<RawStaircase> for GinStaircase {
    type Error = Error;

    fn try_from(raw: RawStaircase) -> Result<Self> {
        GinStaircase::new(raw.alpha, raw.lambdas)
    }
}

impl GinStaircase {
    pub fn new(alpha: u32, lambdas: Vec<u32>) -> Result<Self> {
        if alpha == 0 || lambdas.len() != alpha as usize {
            return Err(Error::DomainError(format!(
                "staircase needs alpha = |lambdas| >= 1, got alpha={alpha} with {} lambdas",
                lambdas.len()
            )));
        }
        if !lambdas.windows(2).all(|w| w[0] > w[1]) || lambdas[lambdas.len() - 1] == 0 {
            return Err(Error::DomainError(format!("lambdas {lambdas:?} are not strictly decreasing and positive")));
        }
        Ok(GinStaircase { alpha, lambdas })
    }

    /// Reads a staircase off the minimal generators of a monomial ideal.
    pub fn from_generators(gens: &MonomialSet) -> Result<Self> {
        let gens = minimal_generators(gens);
        if let Some(g) = gens.iter().find(|g| g.z > 0) {
            return Err(Error::DomainError(format!("generator {g} involves z")));
        }
        let mut by_x: Vec<Monomial> = gens.into_iter().collect();
        by_x.sort_by_key(|g| g.x);
        let Some(last) = by_x.last() else {
            return Err(Error::DomainError("no generators".into()));
        };
        if last.y != 0 {
            return Err(Error::DomainError("no pure power of x among the generators".into()));
        }
        let alpha = last.x;
        if by_x.len() != alpha as usize + 1 || by_x.iter().enumerate().any(|(a, g)| g.x != a as u32) {
            return Err(Error::DomainError("generators do not form a full staircase".into()));
        }
        GinStaircase::new(alpha, by_x[..alpha as usize].iter().map(|g| g.y).collect())
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn lambdas(&self) -> &[u32] {
        &self.lambdas
    }

    pub fn lambda0(&self) -> u32 {
        self.lambdas[0]
    }

    pub fn generators(&self) -> MonomialSet {
        let mut gens: MonomialSet =
            self.lambdas.iter().enumerate().map(|(a, &l)| Monomial::new(a as u32, l, 0)).collect();
        gens.insert(Monomial::new(self.alpha, 0, 0));
        gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.x >= self.alpha || m.y >= self.lambdas[m.x as usize]
    }

    /// Colength of the two-variable restriction, `Σ λ_a`.
    pub fn colength(&self) -> u32 {
        self.lambdas.iter().sum()
    }
}

/// Whether `gin_i · gin_j ⊆ gin_k`, checked on products of generators.
pub fn product_contained(gi: &GinStaircase, gj: &GinStaircase, gk: &GinStaircase) -> bool {
    let (a, b) = (gi.generators(), gj.generators());
    a.iter().all(|u| b.iter().all(|v| gk.contains(&u.mul(v))))
}

/// Top degree of the gin sweep for a uniform scheme: `max(⌈rm/2⌉, 2m) + 3`.
///
/// `y^{λ_0}` appears in degree `λ_0`, which is `rm/2 + 1` for `r ≥ 4` but
/// `2m` for `r ≤ 3`.
pub fn sweep_degree(r: u32, m: u32) -> u32 {
    (r * m).div_ceil(2).max(2 * m) + 3
}

fn random_coordinate_change(field: &PrimeField, rng: &mut ChaCha8Rng) -> [[FFElement; 3]; 3] {
    loop {
        let g: [[FFElement; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| field.element(rng.gen_range(0..field.prime()) as u64)));
        let term = |i: usize, j: usize, k: usize| field.mul(g[0][i], field.mul(g[1][j], g[2][k]));
        let pos = field.add(field.add(term(0, 1, 2), term(1, 2, 0)), term(2, 0, 1));
        let neg = field.add(field.add(term(2, 1, 0), term(0, 2, 1)), term(1, 0, 2));
        if field.sub(pos, neg) != FFElement::ZERO {
            return g;
        }
    }
}

/// Pivot (leading) monomials of `(I)_d`, i.e. `in(I)_d`.
pub fn initial_monomials(cfg: &FatPointConfig, d: u32) -> Result<Vec<Monomial>> {
    let basis = symbolic_power_basis(cfg, d)?;
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mat = FFMatrix::from_rows(monomials_of_degree(d, 3), &basis)?;
    Ok(mat.row_reduce(cfg.field()).pivot_columns)
}

/// Initial ideal of the scheme as given (no coordinate change), swept to
/// `max_degree`.
pub fn initial_staircase(cfg: &FatPointConfig, max_degree: u32, exec: Execution) -> Result<GinStaircase> {
    let per_degree = exec.try_map((0..=max_degree).collect(), |d| initial_monomials(cfg, d))?;
    let mut gens = MonomialSet::new();
    for pivots in per_degree {
        for mono in pivots {
            if !gens.iter().any(|g| g.divides(&mono)) {
                gens.insert(mono);
            }
        }
    }
    let gens = minimal_generators(&gens);
    if !gens.iter().any(|g| g.x == 0 && g.z == 0) {
        return Err(Error::GenericityFailure(format!("no pure power of y in degrees <= {max_degree}")));
    }
    if !is_strongly_stable(&gens) {
        return Err(Error::GenericityFailure("initial ideal is not strongly stable".into()));
    }
    GinStaircase::from_generators(&gens).map_err(|e| Error::GenericityFailure(e.to_string()))
}

pub fn generic_gin(cfg: &FatPointConfig, trials: u32, seed: u64) -> Result<GinStaircase> {
    generic_gin_with(cfg, trials, seed, Execution::default())
}

/// Gin of `I^(m)` by `trials` random coordinate changes; all must agree.
pub fn generic_gin_with(cfg: &FatPointConfig, trials: u32, seed: u64, exec: Execution) -> Result<GinStaircase> {
    let m = cfg
        .uniform_multiplicity()
        .ok_or_else(|| Error::DomainError("generic_gin needs uniform multiplicities".into()))?;
    if trials < 2 {
        return Err(Error::DomainError(format!("need at least 2 trials, got {trials}")));
    }
    let cap = sweep_degree(cfg.r(), m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let changes: Vec<_> = (0..trials).map(|_| random_coordinate_change(cfg.field(), &mut rng)).collect();
    let results = exec.try_map(changes, |g| initial_staircase(&cfg.transformed(&g)?, cap, exec))?;
    let first = &results[0];
    if let Some(other) = results.iter().find(|s| *s != first) {
        return Err(Error::GenericityFailure(format!(
            "trials disagree: {:?} vs {:?}",
            first.lambdas(),
            other.lambdas()
        )));
    }
    Ok(first.clone())
}

pub fn artinian_h_vector(cfg: &FatPointConfig) -> Result<Vec<u32>> {
    artinian_h_vector_with(cfg, Execution::default())
}

/// First difference of `HF(R/I^(m))`, cut once the Hilbert function reaches
/// the degree of the scheme.
pub fn artinian_h_vector_with(cfg: &FatPointConfig, exec: Execution) -> Result<Vec<u32>> {
    let m =
        cfg.uniform_multiplicity().ok_or_else(|| Error::DomainError("h-vector needs uniform multiplicities".into()))?;
    let cap = sweep_degree(cfg.r(), m);
    let hf = quotient_hilbert_sweep(cfg, cap, exec)?;
    let target = cfg.scheme_degree();
    let end = hf.iter().position(|&v| v == target).ok_or(Error::DegreeCap { r: cfg.r(), m, cap })?;
    Ok((0..=end).map(|e| (hf[e] - if e == 0 { 0 } else { hf[e - 1] }) as u32).collect())
}

/// `α = max h`, `λ_a = #{e : h(e) > a}`.
pub fn staircase_from_hilbert(h: &[u32]) -> Result<GinStaircase> {
    if h.first() != Some(&1) {
        return Err(Error::MalformedHVector(format!("h(0) must be 1, got {h:?}")));
    }
    let alpha = *h.iter().max().expect("nonempty");
    let lambdas: Vec<u32> = (0..alpha).map(|a| h.iter().filter(|&&v| v > a).count() as u32).collect();
    GinStaircase::new(alpha, lambdas).map_err(|_| Error::MalformedHVector(format!("{h:?} has no staircase")))
}

/// Comparison of a staircase with the predicted `α = D(m)`, `λ_0 = U(m) - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeCertificate {
    pub alpha: u32,
    pub predicted_alpha: u32,
    pub lambda0: u32,
    pub predicted_lambda0: u32,
    pub pass: bool,
}

pub fn shape_certificate(s: &GinStaircase, r: u32, m: u32) -> Result<ShapeCertificate> {
    let (d, u) = predicted_extremal_shifts(r, m)?;
    Ok(ShapeCertificate {
        alpha: s.alpha(),
        predicted_alpha: d,
        lambda0: s.lambda0(),
        predicted_lambda0: u - 1,
        pass: s.alpha() == d && s.lambda0() == u - 1,
    })
}
