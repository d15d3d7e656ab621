//! Bi-objective NK-landscapes.
//!
//! Each objective is an independent NK-landscape over the same bit string:
//! position `i` contributes a table value looked up from its own bit followed
//! by the bits at its `K` loci (in stored order, most significant first), and
//! the objective is the mean of the `n` contributions.

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::space::{BitString, ObjectiveVector, RngStream};

/// A fully materialized bi-objective NK-landscape.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "NkInstanceData")]
pub struct NkInstance {
    n: usize,
    #[serde(rename = "K")]
    k: usize,
    seed: u64,
    /// `loci[objective][position]` holds the `K` interacting positions.
    loci: Vec<Vec<Vec<usize>>>,
    /// `contributions[objective][position]` holds `2^(K+1)` table entries.
    contributions: Vec<Vec<Vec<f64>>>,
}

#[derive(Deserialize)]
struct NkInstanceData {
    n: usize,
    #[serde(rename = "K")]
    k: usize,
    seed: u64,
    loci: Vec<Vec<Vec<usize>>>,
    contributions: Vec<Vec<Vec<f64>>>,
}

impl TryFrom<NkInstanceData> for NkInstance {
    type Error = Error;

    fn try_from(d: NkInstanceData) -> Result<Self> {
        let inst = NkInstance {
            n: d.n,
            k: d.k,
            seed: d.seed,
            loci: d.loci,
            contributions: d.contributions,
        };
        inst.validate()?;
        Ok(inst)
    }
}

impl NkInstance {
    /// Draws a fresh instance; a pure function of `(n, k, seed)`.
    pub fn generate(n: usize, k: usize, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(contract!("NK-landscape needs n >= 1"));
        }
        if k >= n {
            return Err(contract!("NK-landscape needs K < n (got K = {k}, n = {n})"));
        }
        if k > 20 {
            return Err(contract!("K = {k} gives impractically large tables"));
        }
        let mut rng = RngStream::from_seed(seed);
        let loci: Vec<Vec<Vec<usize>>> = (0..2)
            .map(|_| {
                (0..n)
                    .map(|i| {
                        index::sample(&mut rng, n - 1, k)
                            .into_iter()
                            .map(|t| if t >= i { t + 1 } else { t })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let table = 1usize << (k + 1);
        let contributions = (0..2)
            .map(|_| {
                (0..n)
                    .map(|_| (0..table).map(|_| rng.random::<f64>()).collect())
                    .collect()
            })
            .collect();
        Ok(Self {
            n,
            k,
            seed,
            loci,
            contributions,
        })
    }

    /// Builds an instance from explicit tables, checking every invariant.
    pub fn from_tables(
        n: usize,
        k: usize,
        seed: u64,
        loci: Vec<Vec<Vec<usize>>>,
        contributions: Vec<Vec<Vec<f64>>>,
    ) -> Result<Self> {
        let inst = Self {
            n,
            k,
            seed,
            loci,
            contributions,
        };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<()> {
        let (n, k) = (self.n, self.k);
        if n == 0 || k >= n {
            return Err(contract!(
                "NK-landscape needs 0 <= K < n (got K = {k}, n = {n})"
            ));
        }
        if self.loci.len() != 2 || self.contributions.len() != 2 {
            return Err(contract!(
                "NK-landscape must carry tables for exactly 2 objectives"
            ));
        }
        let table = 1usize << (k + 1);
        for j in 0..2 {
            if self.loci[j].len() != n || self.contributions[j].len() != n {
                return Err(contract!("objective {j}: expected {n} positions"));
            }
            for i in 0..n {
                let loci = &self.loci[j][i];
                if loci.len() != k {
                    return Err(contract!("objective {j}, position {i}: expected {k} loci"));
                }
                for (a, &l) in loci.iter().enumerate() {
                    if l >= n || l == i || loci[..a].contains(&l) {
                        return Err(contract!("objective {j}, position {i}: invalid locus {l}"));
                    }
                }
                let c = &self.contributions[j][i];
                if c.len() != table {
                    return Err(contract!(
                        "objective {j}, position {i}: expected {table} table entries"
                    ));
                }
                if c.iter().any(|v| !(0.0..1.0).contains(v)) {
                    return Err(contract!(
                        "objective {j}, position {i}: contributions must lie in [0, 1)"
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Epistasis degree `K`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn loci(&self, objective: usize, position: usize) -> &[usize] {
        &self.loci[objective][position]
    }

    pub fn contributions(&self, objective: usize, position: usize) -> &[f64] {
        &self.contributions[objective][position]
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub(crate) fn evaluate(&self, x: &BitString) -> ObjectiveVector {
        let bits = x.bits();
        let mut f = [0.0; 2];
        for (j, fj) in f.iter_mut().enumerate() {
            let mut sum = 0.0;
            for i in 0..self.n {
                let mut idx = usize::from(bits[i]);
                for &l in &self.loci[j][i] {
                    idx = (idx << 1) | usize::from(bits[l]);
                }
                sum += self.contributions[j][i][idx];
            }
            *fj = sum / self.n as f64;
        }
        ObjectiveVector::new(f[0], f[1])
    }
}
