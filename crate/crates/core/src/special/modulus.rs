use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Largest nome for which the theta series is evaluated.
pub const MAX_NOME: f64 = 0.95;

const AGM_TOL: f64 = 1e-15;
const AGM_MAX_ITER: usize = 64;

/// Elliptic modulus together with the quantities every other routine needs:
/// the complementary modulus, both complete integrals of the first kind,
/// the complete integral of the second kind and the nome.
///
/// Values are immutable once built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    k: f64,
    k_prime: f64,
    big_k: f64,
    big_k_prime: f64,
    e_complete: f64,
    nome: f64,
}

impl Modulus {
    /// Builds the modulus from `k`, deriving `k' = sqrt((1 - k)(1 + k))`.
    pub fn new(k: f64) -> Result<Self> {
        if !(k > 0.0 && k < 1.0) {
            return Err(Error::Domain(format!("modulus k = {k} must lie in (0, 1)")));
        }
        let k_prime = ((1.0 - k) * (1.0 + k)).sqrt();
        Self::build(k, k_prime)
    }

    /// Builds the modulus from a pair `(k, k')` whose complementary value is
    /// known more accurately than `sqrt(1 - k^2)` would give it, e.g. from a
    /// closed form when `k` is close to 1.
    pub fn with_complement(k: f64, k_prime: f64) -> Result<Self> {
        if !(k > 0.0 && k < 1.0) || !(k_prime > 0.0 && k_prime < 1.0) {
            return Err(Error::Domain(format!(
                "modulus pair ({k}, {k_prime}) must lie in (0, 1)"
            )));
        }
        let defect = (k * k + k_prime * k_prime - 1.0).abs();
        if defect > 8.0 * f64::EPSILON {
            return Err(Error::Domain(format!(
                "k^2 + k'^2 - 1 = {defect:e} for ({k}, {k_prime})"
            )));
        }
        Self::build(k, k_prime)
    }

    fn build(k: f64, k_prime: f64) -> Result<Self> {
        let (big_k, e_complete) = complete_integrals(k, k_prime);
        let (big_k_prime, _) = complete_integrals(k_prime, k);
        let nome = (-std::f64::consts::PI * big_k_prime / big_k).exp();
        if nome > MAX_NOME {
            return Err(Error::Accuracy {
                q: nome,
                limit: MAX_NOME,
            });
        }
        Ok(Self {
            k,
            k_prime,
            big_k,
            big_k_prime,
            e_complete,
            nome,
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn k_prime(&self) -> f64 {
        self.k_prime
    }

    /// Complete elliptic integral of the first kind, K(k).
    pub fn big_k(&self) -> f64 {
        self.big_k
    }

    /// K'(k) = K(k').
    pub fn big_k_prime(&self) -> f64 {
        self.big_k_prime
    }

    /// Complete elliptic integral of the second kind, E(k).
    pub fn e_complete(&self) -> f64 {
        self.e_complete
    }

    /// Nome q = exp(-pi K'/K).
    pub fn nome(&self) -> f64 {
        self.nome
    }

    /// Inverse of `sn` on `[0, K]` from the squares of the three Jacobi
    /// functions at the sought point.
    ///
    /// Passing all three squares lets callers supply closed forms for `cn^2`
    /// and `dn^2`, which keeps full relative accuracy near `u = K`.
    pub fn arcsn_from_squares(&self, sn2: f64, cn2: f64, dn2: f64) -> f64 {
        let sn2 = sn2.clamp(0.0, 1.0);
        sn2.sqrt() * carlson_rf(cn2.max(0.0), dn2.max(0.0), 1.0)
    }
}

/// Returns `(K(k), E(k))` by the arithmetic-geometric mean.
fn complete_integrals(k: f64, k_prime: f64) -> (f64, f64) {
    let mut a = 1.0_f64;
    let mut b = k_prime;
    let mut c = k;
    let mut weight = 0.5;
    let mut sum = weight * c * c;
    for _ in 0..AGM_MAX_ITER {
        if c.abs() <= AGM_TOL * a {
            break;
        }
        let a_next = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = (a * b).sqrt();
        a = a_next;
        weight *= 2.0;
        sum += weight * c * c;
    }
    let big_k = FRAC_PI_2 / a;
    (big_k, big_k * (1.0 - sum))
}

/// Carlson's symmetric integral R_F(x, y, z) by duplication.
pub(crate) fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    let mut mean;
    loop {
        mean = (x + y + z) / 3.0;
        let dev = ((mean - x).abs()).max((mean - y).abs()).max((mean - z).abs());
        if dev <= 1e-3 * mean {
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sx * sz + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    let dx = (mean - x) / mean;
    let dy = (mean - y) / mean;
    let dz = -(dx + dy);
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / mean.sqrt()
}

/// Incomplete elliptic integral of the first kind F(phi, k) for
/// `phi` in `[0, pi/2]`.
pub fn incomplete_f(phi: f64, k: f64) -> Result<f64> {
    if !(0.0..=FRAC_PI_2).contains(&phi) {
        return Err(Error::Domain(format!("amplitude {phi} outside [0, pi/2]")));
    }
    if !(k > 0.0 && k < 1.0) {
        return Err(Error::Domain(format!("modulus k = {k} must lie in (0, 1)")));
    }
    let (s, c) = phi.sin_cos();
    let kp2 = (1.0 - k) * (1.0 + k);
    Ok(s * carlson_rf(c * c, kp2 + k * k * c * c, 1.0))
}
