//! Multinomial pmf values `r(M)`, the product orbit bound, and exact sweeps
//! checking the two multinomial inequalities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;
use crate::rational::{from_int, ratio};
use crate::stypes::ClassTypeTable;
use crate::wreath::{WreathElement, WreathGroup};

/// Probabilities `ρ_1..ρ_k` of the classes of one type, with counts `l_c(M)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeDistribution {
    rho: Vec<BigRational>,
    counts: Vec<u64>,
}

impl TypeDistribution {
    pub fn new(rho: Vec<BigRational>, counts: Vec<u64>) -> Result<Self> {
        if rho.len() != counts.len() || rho.is_empty() {
            return Err(Error::BadParameter("need one count per probability".into()));
        }
        if rho.iter().any(|r| *r < BigRational::zero()) || rho.iter().sum::<BigRational>() != BigRational::one() {
            return Err(Error::BadParameter("probabilities must be nonnegative and sum to 1".into()));
        }
        Ok(TypeDistribution { rho, counts })
    }

    pub fn rho(&self) -> &[BigRational] {
        &self.rho
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn n(&self) -> u64 {
        self.counts.iter().sum()
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `n! / (l_1! ⋯ l_k!)`.
pub fn multinomial_coefficient(counts: &[u64]) -> BigInt {
    let n: u64 = counts.iter().sum();
    counts.iter().fold(factorial(n), |acc, &l| acc / factorial(l))
}

/// `x^e` with `0^0 = 1`.
fn rpow(x: &BigRational, e: u64) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

/// Multinomial pmf `(n; l_1..l_k) ρ_1^{l_1} ⋯ ρ_k^{l_k}`.
pub fn pmf(rho: &[BigRational], counts: &[u64]) -> BigRational {
    let coeff = BigRational::from_integer(multinomial_coefficient(counts));
    rho.iter().zip(counts).fold(coeff, |acc, (r, &l)| acc * rpow(r, l))
}

pub fn r_value(d: &TypeDistribution) -> BigRational {
    pmf(&d.rho, &d.counts)
}

/// `∏_{l,τ} r(M_l^τ(w))` for `w` in a wreath product over `Aut(S)`.
pub fn orbit_upper_bound(wr: &WreathGroup<'_>, w: &WreathElement, table: &ClassTypeTable) -> BigRational {
    let types = table.type_of_class();
    let profile = wr.profile(w, Some(&types));
    let refined = profile.refined.expect("typing supplied");
    let mut bound = BigRational::one();
    for ((_, ty), m) in refined {
        let classes = table.classes_of_type(ty);
        let rho: Vec<BigRational> = classes.iter().map(|&c| table.rho(c).clone()).collect();
        let counts: Vec<u64> = classes
            .iter()
            .map(|c| m.iter().find(|(x, _)| x == c).map_or(0, |&(_, k)| k as u64))
            .collect();
        bound *= pmf(&rho, &counts);
    }
    bound
}

/// `f_{l_1..l_k}` at `((l_1−1)/(n−1), l_2/(n−1), …, l_k/(n−1))`, where
/// `f(x) = (n; l) x_1^{l_1−1} x_2^{l_2} ⋯ x_k^{l_k}`.
pub fn lemma3_candidate_value(n: u64, counts: &[u64]) -> Result<BigRational> {
    if counts.is_empty()
        || counts.contains(&0)
        || counts.windows(2).any(|w| w[0] < w[1])
        || counts.iter().sum::<u64>() != n
    {
        return Err(Error::BadComposition(format!(
            "{counts:?} is not a nonincreasing composition of {n} into positive parts"
        )));
    }
    if counts.len() == 1 {
        return Ok(BigRational::one());
    }
    let coeff = BigRational::from_integer(multinomial_coefficient(counts));
    let first = rpow(&ratio(counts[0] - 1, n - 1), counts[0] - 1);
    Ok(counts[1..]
        .iter()
        .fold(coeff * first, |acc, &l| acc * rpow(&ratio(l, n - 1), l)))
}

/// Partitions of `n` into exactly `k` positive nonincreasing parts, in colex
/// order (compared from the last part backwards).
pub fn partitions(n: u64, k: usize) -> Vec<Vec<u64>> {
    fn rec(rest: u64, k: usize, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if k == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = rest.div_ceil(k as u64).max(1);
        for part in lo..=max.min(rest - (k as u64 - 1)) {
            cur.push(part);
            rec(rest - part, k - 1, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 || n < k as u64 {
        return out;
    }
    rec(n, k, n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub n: u64,
    pub counts: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<String>>,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The `(k, n)` grids checked for the first inequality.
pub fn lemma3_grid() -> Vec<(usize, u64)> {
    let mut grid: Vec<(usize, u64)> = (1..=9).map(|n| (4, n)).collect();
    grid.extend((1..=15).filter(|&n| n != 3).map(|n| (3, n)));
    grid.extend((10..=96).map(|n| (2, n)));
    grid
}

/// Candidate value ≤ 1 for every partition in the given `(k, n)` pairs.
pub fn verify_lemma3_on(grid: &[(usize, u64)]) -> SweepReport {
    let per_cell: Vec<(u64, Vec<Violation>)> = par::map_slice(grid, |&(k, n)| {
        let parts = partitions(n, k);
        let violations = parts
            .iter()
            .filter_map(|l| {
                let v = lemma3_candidate_value(n, l).expect("valid partition");
                (v > BigRational::one()).then(|| Violation {
                    n,
                    counts: l.clone(),
                    rho: None,
                    value: crate::rational::to_string(&v),
                })
            })
            .collect();
        (parts.len() as u64, violations)
    });
    let mut report = SweepReport {
        suite: "lemma3".into(),
        checked: 0,
        violations: Vec::new(),
        seed: None,
    };
    for (c, v) in per_cell {
        report.checked += c;
        report.violations.extend(v);
    }
    report
}

pub fn verify_lemma3_grids() -> SweepReport {
    verify_lemma3_on(&lemma3_grid())
}

/// Compositions of `n` into `k` nonnegative parts.
pub fn weak_compositions(n: u64, k: usize) -> Vec<Vec<u64>> {
    if k == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            weak_compositions(n - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug)]
pub enum PmfMode {
    /// Denominators up to `max_den`, `k ≤ max_k`, `1 ≤ n ≤ max_n`.
    Exhaustive { max_den: u64, max_k: usize, max_n: u64 },
    Random { samples: u64, seed: u64 },
}

impl PmfMode {
    pub fn default_exhaustive() -> Self {
        PmfMode::Exhaustive { max_den: 6, max_k: 4, max_n: 8 }
    }
}

fn check_pmf(rho: &[BigRational], counts: &[u64]) -> Option<Violation> {
    let value = pmf(rho, counts);
    let max = rho.iter().max().expect("nonempty");
    (value > *max).then(|| Violation {
        n: counts.iter().sum(),
        counts: counts.to_vec(),
        rho: Some(rho.iter().map(crate::rational::to_string).collect()),
        value: crate::rational::to_string(&value),
    })
}

/// Multinomial pmf ≤ max ρ_i over exact rational grids or seeded random samples.
pub fn pmf_bound_check(mode: PmfMode) -> SweepReport {
    match mode {
        PmfMode::Exhaustive { max_den, max_k, max_n } => {
            let mut cells: Vec<(u64, usize)> = Vec::new();
            for d in 1..=max_den {
                for k in 1..=max_k {
                    cells.push((d, k));
                }
            }
            let results: Vec<(u64, Vec<Violation>)> = par::map_slice(&cells, |&(d, k)| {
                let mut checked = 0;
                let mut violations = Vec::new();
                for num in weak_compositions(d, k) {
                    let rho: Vec<BigRational> = num.iter().map(|&a| ratio(a, d)).collect();
                    for n in 1..=max_n {
                        for counts in weak_compositions(n, k) {
                            checked += 1;
                            violations.extend(check_pmf(&rho, &counts));
                        }
                    }
                }
                (checked, violations)
            });
            let mut report = SweepReport {
                suite: "pmf".into(),
                checked: 0,
                violations: Vec::new(),
                seed: None,
            };
            for (c, v) in results {
                report.checked += c;
                report.violations.extend(v);
            }
            report
        }
        PmfMode::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut violations = Vec::new();
            for _ in 0..samples {
                let k = rng.gen_range(1..=6usize);
                let d = rng.gen_range(1..=60u64);
                let mut cuts: Vec<u64> = (0..k - 1).map(|_| rng.gen_range(0..=d)).collect();
                cuts.sort_unstable();
                cuts.insert(0, 0);
                cuts.push(d);
                let rho: Vec<BigRational> = cuts.windows(2).map(|w| ratio(w[1] - w[0], d)).collect();
                let n = rng.gen_range(1..=16u64);
                let mut counts = vec![0u64; k];
                for _ in 0..n {
                    counts[rng.gen_range(0..k)] += 1;
                }
                violations.extend(check_pmf(&rho, &counts));
            }
            SweepReport {
                suite: "pmf".into(),
                checked: samples,
                violations,
                seed: Some(seed),
            }
        }
    }
}

/// Exact value used by the excluded cases `n = k ∈ {2, 3}`.
pub fn excluded_case_value(k: u64) -> BigRational {
    let ones = vec![1u64; k as usize];
    lemma3_candidate_value(k, &ones).expect("valid")
}

/// `ρ_1` of a single-class distribution.
pub fn single(n: u64) -> TypeDistribution {
    TypeDistribution::new(vec![from_int(1)], vec![n]).expect("valid")
}
