use std::path::PathBuf;

use anyhow::{bail, Result};

use conicgin::{Error, PrimeField};

use crate::args::{Command, CommonArgs, Format, GinMethod, ResolveMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gin(GinMethod),
    Resolve(ResolveMethod),
    Limit { certify: bool },
    Verify,
}

/// Validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub r: u32,
    /// `m` for single computations, `m_max` for sweeps.
    pub m_max: u32,
    pub field: PrimeField,
    pub seed: u64,
    pub trials: u32,
    pub jobs: Option<usize>,
    pub out_dir: PathBuf,
    pub formats: Vec<Format>,
}

/// Smallest admissible prime bound: the prime must exceed
/// `1000 · (⌈r·m_max/2⌉ + 3)`.
pub fn prime_floor(r: u32, m_max: u32) -> u64 {
    1000 * ((r as u64 * m_max as u64).div_ceil(2) + 3)
}

impl RunConfig {
    pub fn from_command(cmd: &Command) -> Result<Self> {
        let (command, r, m_max, common): (CommandKind, u32, u32, &CommonArgs) = match cmd {
            Command::Gin(a) => (CommandKind::Gin(a.method), a.r, a.m, &a.common),
            Command::Resolve(a) => (CommandKind::Resolve(a.method), a.r, a.m, &a.common),
            Command::Limit(a) => (CommandKind::Limit { certify: a.certify }, a.r, a.m_max, &a.common),
            Command::Verify(a) => (CommandKind::Verify, a.r, a.m_max, &a.common),
        };
        if r < 2 {
            return Err(Error::DegenerateInput(format!("need r >= 2 points, got r={r}")).into());
        }
        if m_max < 1 {
            bail!("multiplicity must be at least 1");
        }
        if common.trials < 2 {
            bail!("need at least 2 trials, got {}", common.trials);
        }
        let field = PrimeField::new(common.prime)?;
        let uses_field = !matches!(command, CommandKind::Resolve(_));
        if uses_field && (field.prime() as u64) <= prime_floor(r, m_max) {
            bail!(
                "prime {} is below the degree guard: need a prime > {} for r={r}, m={m_max}",
                field.prime(),
                prime_floor(r, m_max)
            );
        }
        if common.jobs == Some(0) {
            bail!("--jobs must be positive");
        }
        Ok(RunConfig {
            command,
            r,
            m_max,
            field,
            seed: common.seed,
            trials: common.trials,
            jobs: common.jobs,
            out_dir: common.out_dir.clone(),
            formats: common.format.clone(),
        })
    }

    pub fn wants(&self, format: Format) -> bool {
        self.formats.is_empty() || self.formats.contains(&format)
    }

    pub fn cache_dir(&self) -> PathBuf {
        self.out_dir.join("cache")
    }
}
