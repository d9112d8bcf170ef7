use serde::Serialize;

use super::field::{Field, C64};
use super::poly::Poly;
use super::scalar::Tolerance;
use crate::error::{Error, Result};

const ABERTH_MAX_ITERATIONS: usize = 2000;
/// Relative distance within which approximations may belong to one repeated root.
const MULTIPLE_ROOT_SEARCH: f64 = 1e-3;
/// Relative backward error a polished repeated root must reach.
const MULTIPLE_ROOT_BACKWARD: f64 = 1e-13;

/// One distinct root and the number of computed roots clustered onto it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootCluster {
    #[serde(rename = "lambda", serialize_with = "ser_c64")]
    pub value: C64,
    #[serde(rename = "mult")]
    pub multiplicity: usize,
}

fn ser_c64<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

/// A polynomial split into distinct linear factors over ℂ.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct FactoredPoly {
    pub roots: Vec<RootCluster>,
}

impl FactoredPoly {
    /// Number of distinct roots.
    pub fn distinct(&self) -> usize {
        self.roots.len()
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// `Π (x - λ_j)^{n_j}`, monic.
    pub fn expand(&self) -> Poly<C64> {
        let pairs: Vec<_> = self.roots.iter().map(|r| (r.value, r.multiplicity)).collect();
        Poly::from_roots(&pairs)
    }
}

/// All complex roots of `p` with multiplicities, clustering within `tol.eps_root`.
pub fn poly_roots<F: Field>(p: &Poly<F>, tol: &Tolerance) -> Result<FactoredPoly> {
    poly_roots_with_radius(p, tol.eps_root)
}

/// [`poly_roots`] with an explicit clustering radius.
pub fn poly_roots_with_radius<F: Field>(p: &Poly<F>, radius: f64) -> Result<FactoredPoly> {
    let p = p.to_c64();
    let Some(degree) = p.degree().filter(|&d| d >= 1) else {
        return Err(Error::InvalidInput("root finding needs degree >= 1".into()));
    };
    let lead = p.coeffs()[degree];
    let monic: Vec<C64> = p.coeffs().iter().map(|c| c / lead).collect();

    // Exact zero roots are deflated before any numerics.
    let zeros = monic.iter().take_while(|c| c.norm() == 0.0).count();
    let rest = &monic[zeros..];
    let mut raw = vec![C64::new(0.0, 0.0); zeros];
    raw.extend(match rest.len() - 1 {
        0 => Vec::new(),
        1 => vec![-rest[0]],
        2 => quadratic(rest[1], rest[0]).to_vec(),
        3 => cubic(rest[2], rest[1], rest[0])
            .iter()
            .map(|&z| polish(rest, z))
            .collect(),
        _ => aberth(rest)?,
    });
    let raw = refine_multiple(&monic, raw);
    Ok(FactoredPoly { roots: cluster(&raw, radius) })
}

/// Roots of `x^2 + b x + c`.
fn quadratic(b: C64, c: C64) -> [C64; 2] {
    let s = (b * b - 4.0 * c).sqrt();
    let q = if (b + s).norm() >= (b - s).norm() { -(b + s) / 2.0 } else { -(b - s) / 2.0 };
    if q.norm() == 0.0 {
        [-b / 2.0, -b / 2.0]
    } else {
        [q, c / q]
    }
}

/// Roots of `x^3 + b x^2 + c x + d` in closed form.
fn cubic(b: C64, c: C64, d: C64) -> [C64; 3] {
    let d0 = b * b - 3.0 * c;
    let d1 = 2.0 * b * b * b - 9.0 * b * c + 27.0 * d;
    let disc = (d1 * d1 - 4.0 * d0 * d0 * d0).sqrt();
    let big = if (d1 + disc).norm() >= (d1 - disc).norm() { d1 + disc } else { d1 - disc };
    let cc = (big / 2.0).powf(1.0 / 3.0);
    if cc.norm() == 0.0 {
        return [-b / 3.0; 3];
    }
    let xi = C64::new(-0.5, 3f64.sqrt() / 2.0);
    let mut out = [C64::new(0.0, 0.0); 3];
    let mut rot = C64::new(1.0, 0.0);
    for slot in &mut out {
        let ck = rot * cc;
        *slot = -(b + ck + d0 / ck) / 3.0;
        rot *= xi;
    }
    out
}

fn horner(coeffs: &[C64], z: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// A few Newton steps, kept only while the residual shrinks.
fn polish(coeffs: &[C64], mut z: C64) -> C64 {
    let (mut val, mut der) = horner(coeffs, z);
    for _ in 0..8 {
        if der.norm() == 0.0 || val.norm() == 0.0 {
            break;
        }
        let cand = z - val / der;
        let (cv, cd) = horner(coeffs, cand);
        if cv.norm() >= val.norm() {
            break;
        }
        (z, val, der) = (cand, cv, cd);
    }
    z
}

/// Backward-error bound `Σ |a_k| |z|^k`, used as the residual scale.
fn residual_scale(coeffs: &[C64], z: C64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

/// Aberth–Ehrlich simultaneous iteration for a monic polynomial.
fn aberth(coeffs: &[C64]) -> Result<Vec<C64>> {
    let n = coeffs.len() - 1;
    // Cauchy bound on root moduli.
    let radius = 1.0 + coeffs[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            C64::from_polar(radius * 0.5, theta)
        })
        .collect();
    let converged = |z: &[C64]| {
        z.iter().all(|&zk| horner(coeffs, zk).0.norm() <= 64.0 * f64::EPSILON * residual_scale(coeffs, zk))
    };
    for _ in 0..ABERTH_MAX_ITERATIONS {
        if converged(&z) {
            return Ok(z);
        }
        let mut moved = false;
        for k in 0..n {
            let (p, dp) = horner(coeffs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = if dp.norm() == 0.0 { C64::new(1e-8, 1e-8) } else { p / dp };
            let repulsion: C64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let diff = z[k] - z[j];
                    if diff.norm() == 0.0 {
                        C64::new(0.0, 0.0)
                    } else {
                        diff.inv()
                    }
                })
                .sum();
            let step = ratio / (C64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() && step.norm() > 0.0 {
                z[k] -= step;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    // Repeated roots stall Aberth short of full precision; accept a looser
    // backward error before giving up.
    let max_residual = z
        .iter()
        .map(|&zk| horner(coeffs, zk).0.norm() / residual_scale(coeffs, zk).max(1.0))
        .fold(0.0, f64::max);
    if max_residual <= 1e-10 {
        Ok(z)
    } else {
        Err(Error::RootsDidNotConverge { iterations: ABERTH_MAX_ITERATIONS, max_residual })
    }
}

/// Indices of `raw` grouped by single linkage at `radius(z)`.
fn link(raw: &[C64], radius: impl Fn(C64) -> f64) -> Vec<Vec<usize>> {
    let n = raw.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], mut i: usize) -> usize {
        while label[i] != i {
            label[i] = label[label[i]];
            i = label[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if (raw[i] - raw[j]).norm() <= radius(raw[i]).max(radius(raw[j])) {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                label[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in 0..n {
        let root = find(&mut label, i);
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, members)) => members.push(i),
            None => groups.push((root, vec![i])),
        }
    }
    groups.into_iter().map(|(_, m)| m).collect()
}

fn derivative(coeffs: &[C64]) -> Vec<C64> {
    coeffs.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect()
}

/// A repeated root comes out of simultaneous iteration as a spread of
/// `m` approximations accurate only to about `eps^{1/m}`. Nearby
/// approximations are replaced by one Newton-polished root of `p^{(m-1)}`
/// when that point is an `m`-fold root up to backward error.
fn refine_multiple(coeffs: &[C64], mut raw: Vec<C64>) -> Vec<C64> {
    for group in link(&raw, |z| MULTIPLE_ROOT_SEARCH * z.norm().max(1.0)) {
        let m = group.len();
        if m < 2 {
            continue;
        }
        let mut derivs = vec![coeffs.to_vec()];
        for _ in 1..m {
            let d = derivative(derivs.last().expect("non-empty"));
            derivs.push(d);
        }
        let mut z = group.iter().map(|&i| raw[i]).sum::<C64>() / m as f64;
        let target = &derivs[m - 1];
        for _ in 0..50 {
            let (v, dv) = horner(target, z);
            if dv.norm() == 0.0 || v.norm() == 0.0 {
                break;
            }
            let step = v / dv;
            z -= step;
            if step.norm() <= f64::EPSILON * z.norm().max(1.0) {
                break;
            }
        }
        let is_multiple = derivs[..m - 1]
            .iter()
            .all(|d| horner(d, z).0.norm() <= MULTIPLE_ROOT_BACKWARD * residual_scale(d, z).max(1.0));
        let close = group.iter().all(|&i| (raw[i] - z).norm() <= MULTIPLE_ROOT_SEARCH * z.norm().max(1.0));
        if is_multiple && close {
            for &i in &group {
                raw[i] = z;
            }
        }
    }
    raw
}

/// Single-linkage clustering; cluster value is the member mean.
fn cluster(raw: &[C64], radius: f64) -> Vec<RootCluster> {
    let mut out: Vec<RootCluster> = link(raw, |_| radius)
        .into_iter()
        .map(|idx| {
            let members: Vec<C64> = idx.iter().map(|&i| raw[i]).collect();
            let mean = members.iter().sum::<C64>() / members.len() as f64;
            RootCluster { value: snap(mean, radius), multiplicity: members.len() }
        })
        .collect();
    out.sort_by(|a, b| {
        (a.value.re, a.value.im).partial_cmp(&(b.value.re, b.value.im)).unwrap_or(std::cmp::Ordering::Equal)
    });
    out
}

/// Flush components that are zero within the clustering radius.
fn snap(z: C64, radius: f64) -> C64 {
    let f = |v: f64| if v.abs() <= radius * 1e-3 { 0.0 } else { v };
    C64::new(f(z.re), f(z.im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn roots_of(coeffs: &[C64]) -> FactoredPoly {
        poly_roots(&Poly::new(coeffs.to_vec()), &Tolerance::default()).unwrap()
    }

    fn has(f: &FactoredPoly, value: C64, mult: usize) -> bool {
        f.roots.iter().any(|r| (r.value - value).norm() < 1e-9 && r.multiplicity == mult)
    }

    #[test]
    fn type2_polynomial() {
        // x^3 - x^2
        let f = roots_of(&[c(0., 0.), c(0., 0.), c(-1., 0.), c(1., 0.)]);
        assert_eq!(f.distinct(), 2);
        assert!(has(&f, c(0., 0.), 2));
        assert!(has(&f, c(1., 0.), 1));
    }

    #[test]
    fn gamma_2i_has_double_root_at_i() {
        // x^3 - 2i x^2 - x
        let f = roots_of(&[c(0., 0.), c(-1., 0.), c(0., -2.), c(1., 0.)]);
        assert_eq!(f.distinct(), 2);
        assert!(has(&f, c(0., 0.), 1));
        assert!(has(&f, c(0., 1.), 2));
    }

    #[test]
    fn pure_square() {
        let f = roots_of(&[c(0., 0.), c(0., 0.), c(1., 0.)]);
        assert_eq!(f.roots, vec![RootCluster { value: c(0., 0.), multiplicity: 2 }]);
    }

    #[test]
    fn cubic_with_double_root_is_clustered() {
        // (x - 1)^2 (x + 2) = x^3 - 3x + 2
        let f = roots_of(&[c(2., 0.), c(-3., 0.), c(0., 0.), c(1., 0.)]);
        assert_eq!(f.distinct(), 2);
        assert!(f.roots.iter().any(|r| (r.value - c(1., 0.)).norm() < 1e-7 && r.multiplicity == 2));
        assert!(has(&f, c(-2., 0.), 1));
    }

    #[test]
    fn quartic_by_aberth() {
        // (x - 1)(x + 1)(x - i)(x + 2i)
        let p = Poly::from_roots(&[(c(1., 0.), 1), (c(-1., 0.), 1), (c(0., 1.), 1), (c(0., -2.), 1)]);
        let f = poly_roots(&p, &Tolerance::default()).unwrap();
        assert_eq!(f.distinct(), 4);
        for r in [c(1., 0.), c(-1., 0.), c(0., 1.), c(0., -2.)] {
            assert!(has(&f, r, 1), "missing {r}");
        }
    }

    #[test]
    fn constant_rejected() {
        assert!(poly_roots(&Poly::new(vec![c(3., 0.)]), &Tolerance::default()).is_err());
    }

    fn root_strategy() -> impl Strategy<Value = Vec<C64>> {
        proptest::collection::vec((-4i32..5, -4i32..5), 1..7)
            .prop_map(|v| v.into_iter().map(|(a, b)| c(a as f64 / 2.0, b as f64 / 2.0)).collect())
    }

    proptest! {
        #[test]
        fn reexpansion_matches_input(roots in root_strategy(), scale in 1i32..5) {
            let p = Poly::from_roots(&roots.iter().map(|&r| (r, 1)).collect::<Vec<_>>());
            let p = p.map(|v| v * scale as f64);
            let f = poly_roots(&p, &Tolerance::default()).unwrap();
            prop_assert_eq!(f.degree(), roots.len());
            let back = f.expand();
            let monic: Vec<C64> = p.coeffs().iter().map(|v| v / scale as f64).collect();
            let norm = monic.iter().map(|v| v.norm()).fold(1.0, f64::max);
            for (a, b) in back.coeffs().iter().zip(&monic) {
                prop_assert!((a - b).norm() <= 1e-6 * norm, "{} vs {}", a, b);
            }
        }
    }
}
