use super::Modulus;

const LANDEN_MAX_DEPTH: usize = 32;
const LANDEN_TOL: f64 = 1e-15;

/// Values of `sn`, `cn` and `dn` at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

impl Modulus {
    /// `dn` from whichever of `sn`, `cn` is smaller, avoiding cancellation.
    fn dn_from(&self, sn: f64, cn: f64) -> f64 {
        let (k, kp) = (self.k(), self.k_prime());
        if sn.abs() <= cn.abs() {
            (1.0 - k * k * sn * sn).sqrt()
        } else {
            (kp * kp + k * k * cn * cn).sqrt()
        }
    }

    /// Jacobi elliptic functions by the descending Landen (AGM) scale.
    pub fn sn_cn_dn(&self, u: f64) -> JacobiTriple {
        let mut a = [0.0_f64; LANDEN_MAX_DEPTH + 1];
        let mut c = [0.0_f64; LANDEN_MAX_DEPTH + 1];
        a[0] = 1.0;
        c[0] = self.k();
        let mut b = self.k_prime();
        let mut depth = 0;
        while depth < LANDEN_MAX_DEPTH && c[depth].abs() > LANDEN_TOL * a[depth] {
            let (an, bn) = (a[depth], b);
            a[depth + 1] = 0.5 * (an + bn);
            c[depth + 1] = 0.5 * (an - bn);
            b = (an * bn).sqrt();
            depth += 1;
        }

        if depth == 0 {
            let (sn, cn) = u.sin_cos();
            return JacobiTriple {
                sn,
                cn,
                dn: self.dn_from(sn, cn),
            };
        }

        let mut phi = (1u64 << depth) as f64 * a[depth] * u;
        for n in (1..=depth).rev() {
            phi = 0.5 * (phi + (c[n] / a[n] * phi.sin()).asin());
        }
        let (sn, cn) = phi.sin_cos();
        JacobiTriple {
            sn,
            cn,
            dn: self.dn_from(sn, cn),
        }
    }
}
