//! Sampling points on the affine model of a cover and checking that explicit
//! rational maps act on it.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::CyclicCover;
use crate::{Error, Result};

/// Residual bound met by freshly sampled points.
pub const SAMPLE_EPS: f64 = 1e-12;
/// Tolerance for the action checks (relative, componentwise).
pub const ACTION_TOL: f64 = 1e-8;
/// Denominators smaller than this count as poles.
const POLE_EPS: f64 = 1e-12;
const MAX_RESAMPLES: u64 = 1000;

const ANNULUS: (f64, f64) = (0.5, 2.0);
const BRANCH_CLEARANCE: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Factor {
    Const(Complex64),
    PowX(i32),
    PowY(i32),
    /// `(x - c)^k`
    Linear { c: Complex64, k: i32 },
}

/// A product of factors, evaluated at `(x, y)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Monomial(pub Vec<Factor>);

impl Monomial {
    pub fn new(factors: Vec<Factor>) -> Self {
        Monomial(factors)
    }

    /// `None` at a pole.
    pub fn eval(&self, x: Complex64, y: Complex64) -> Option<Complex64> {
        let mut acc = Complex64::new(1.0, 0.0);
        for f in &self.0 {
            let (base, k) = match *f {
                Factor::Const(c) => {
                    acc *= c;
                    continue;
                }
                Factor::PowX(k) => (x, k),
                Factor::PowY(k) => (y, k),
                Factor::Linear { c, k } => (x - c, k),
            };
            if k < 0 && base.norm() < POLE_EPS {
                return None;
            }
            acc *= base.powi(k);
        }
        Some(acc)
    }
}

fn fmt_c(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else {
        format!("({}{:+}i)", c.re, c.im)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|t| match *t {
                Factor::Const(c) => fmt_c(c),
                Factor::PowX(1) => "x".into(),
                Factor::PowY(1) => "y".into(),
                Factor::PowX(k) => format!("x^{k}"),
                Factor::PowY(k) => format!("y^{k}"),
                Factor::Linear { c, k } => format!("(x-{})^{k}", fmt_c(c)),
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `(x, y) ↦ (X(x, y), Y(x, y))` with `X`, `Y` monomials in `x`, `y` and
/// linear factors.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMap {
    pub x: Monomial,
    pub y: Monomial,
}

impl RationalMap {
    pub fn new(x: Vec<Factor>, y: Vec<Factor>) -> Self {
        RationalMap { x: Monomial(x), y: Monomial(y) }
    }

    pub fn identity() -> Self {
        RationalMap::new(vec![Factor::PowX(1)], vec![Factor::PowY(1)])
    }

    /// The deck transformation `(x, y) ↦ (x, ζ_n^k y)`.
    pub fn deck(n: u64, k: u64) -> Self {
        let zeta = Complex64::from_polar(1.0, 2.0 * PI * (k % n) as f64 / n as f64);
        RationalMap::new(vec![Factor::PowX(1)], vec![Factor::Const(zeta), Factor::PowY(1)])
    }

    pub fn apply(&self, p: (Complex64, Complex64)) -> Option<(Complex64, Complex64)> {
        Some((self.x.eval(p.0, p.1)?, self.y.eval(p.0, p.1)?))
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x,y) -> ({}, {})", self.x, self.y)
    }
}

/// Applies `maps` in order: the first one acts first.
pub fn apply_word(maps: &[&RationalMap], p: (Complex64, Complex64)) -> Option<(Complex64, Complex64)> {
    maps.iter().try_fold(p, |q, m| m.apply(q))
}

/// Numerical model `y^n = c Π (x - e_i)^{k_i}` of a cover.
#[derive(Debug, Clone)]
struct AffineModel {
    n: i32,
    constant: Complex64,
    factors: Vec<(Complex64, i32)>,
}

impl AffineModel {
    fn of(cover: &CyclicCover) -> Result<Self> {
        let c = cover.constant();
        let factors = cover
            .branches()
            .iter()
            .map(|b| {
                b.point
                    .to_complex()
                    .map(|e| (e, b.exponent as i32))
                    .ok_or_else(|| Error::domain("finite branch point without a numeric value"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AffineModel {
            n: cover.n() as i32,
            constant: Complex64::new(*c.numer() as f64 / *c.denom() as f64, 0.0),
            factors,
        })
    }

    fn rhs(&self, x: Complex64) -> Complex64 {
        self.factors.iter().fold(self.constant, |acc, &(e, k)| acc * (x - e).powi(k))
    }

    fn residual(&self, (x, y): (Complex64, Complex64)) -> f64 {
        let lhs = y.powi(self.n);
        let rhs = self.rhs(x);
        let scale = lhs.norm().max(rhs.norm()).max(f64::MIN_POSITIVE);
        (lhs - rhs).norm() / scale
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> (Complex64, Complex64) {
        let (lo, hi) = ANNULUS;
        loop {
            // uniform in area
            let r = rng.gen_range(lo * lo..=hi * hi).sqrt();
            let theta = rng.gen_range(0.0..2.0 * PI);
            let x = Complex64::from_polar(r, theta);
            if self.factors.iter().any(|&(e, _)| (x - e).norm() < BRANCH_CLEARANCE) {
                continue;
            }
            let y = self.rhs(x).powf(1.0 / self.n as f64);
            return (x, y);
        }
    }
}

/// Points on the affine curve, reproducible from the seed.
#[derive(Debug, Clone)]
pub struct CurveSample {
    pub points: Vec<(Complex64, Complex64)>,
    seed: u64,
    model: AffineModel,
}

impl CurveSample {
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Largest residual of the curve equation over the stored points.
    pub fn max_residual(&self) -> f64 {
        self.points.iter().map(|&p| self.model.residual(p)).fold(0.0, f64::max)
    }

    // Replacement for a point that ran into a pole; one stream per point and
    // attempt keeps this deterministic.
    fn replacement(&self, index: usize, attempt: u64) -> (Complex64, Complex64) {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(1 + index as u64 * MAX_RESAMPLES + attempt);
        self.model.draw(&mut rng)
    }

    /// Runs `f` on every point, swapping in a fresh point whenever `f`
    /// reports a pole.
    fn for_each<T>(&self, mut f: impl FnMut(&AffineModel, (Complex64, Complex64)) -> Option<T>) -> Vec<T> {
        let mut out = Vec::with_capacity(self.points.len());
        for (i, &p) in self.points.iter().enumerate() {
            let mut value = f(&self.model, p);
            let mut attempt = 0;
            while value.is_none() && attempt < MAX_RESAMPLES {
                value = f(&self.model, self.replacement(i, attempt));
                attempt += 1;
            }
            out.extend(value);
        }
        out
    }
}

pub fn sample_curve(cover: &CyclicCover, count: usize, seed: u64) -> Result<CurveSample> {
    if count == 0 {
        return Err(Error::domain("sample count must be positive"));
    }
    let model = AffineModel::of(cover)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<_> = (0..count).map(|_| model.draw(&mut rng)).collect();
    let sample = CurveSample { points, seed, model };
    let worst = sample.max_residual();
    if worst > SAMPLE_EPS {
        return Err(Error::Invariant(format!("sampled point off the curve by {worst:e}")));
    }
    Ok(sample)
}

fn check_same_cover(cover: &CyclicCover, samples: &CurveSample) -> Result<()> {
    let model = AffineModel::of(cover)?;
    if model.n != samples.model.n || model.factors != samples.model.factors || model.constant != samples.model.constant {
        return Err(Error::domain("samples were drawn from a different cover"));
    }
    Ok(())
}

/// Largest relative residual of the curve equation at the image points.
pub fn action_residual(cover: &CyclicCover, map: &RationalMap, samples: &CurveSample) -> Result<f64> {
    check_same_cover(cover, samples)?;
    let r = samples.for_each(|model, p| map.apply(p).map(|q| model.residual(q)));
    Ok(r.into_iter().fold(0.0, f64::max))
}

pub(crate) fn close(a: (Complex64, Complex64), b: (Complex64, Complex64)) -> bool {
    let near = |u: Complex64, v: Complex64| (u - v).norm() <= ACTION_TOL * u.norm().max(v.norm()).max(1e-300);
    near(a.0, b.0) && near(a.1, b.1)
}

/// Whether the two words (applied left to right) agree at every sample.
pub fn words_agree(lhs: &[&RationalMap], rhs: &[&RationalMap], samples: &CurveSample) -> bool {
    let ok = samples.for_each(|_, p| Some(close(apply_word(lhs, p)?, apply_word(rhs, p)?)));
    ok.len() == samples.len() && ok.into_iter().all(|b| b)
}

/// True iff `map^k` is the identity on every sample and no smaller
/// positive power is.
pub fn verify_map_order(cover: &CyclicCover, map: &RationalMap, k: u64, samples: &CurveSample) -> bool {
    if k == 0 || check_same_cover(cover, samples).is_err() {
        return false;
    }
    // fixed[j-1]: map^j fixed this point
    let per_point = samples.for_each(|_, p| {
        let mut q = p;
        let mut fixed = Vec::with_capacity(k as usize);
        for _ in 0..k {
            q = map.apply(q)?;
            fixed.push(close(q, p));
        }
        Some(fixed)
    });
    if per_point.len() != samples.len() {
        return false;
    }
    let identity_at = |j: usize| per_point.iter().all(|f| f[j]);
    identity_at(k as usize - 1) && (0..k as usize - 1).all(|j| !identity_at(j))
}
