//! Complex polynomial evaluation and root finding.
//!
//! Roots come from Durand-Kerner iteration on the monic polynomial with
//! deterministic ring initialization (radius = 1 + max coefficient
//! magnitude), capped at 500 iterations with residual target 1e-10. Multiple
//! roots make plain iteration stall at accuracy ~eps^(1/m), so clusters are
//! refined by Newton steps on the (m-1)-th derivative, which has a simple
//! root at an m-fold root; a refinement is kept only when the polynomial
//! value at the refined point is consistent with rounding noise, otherwise
//! the cluster is reported as separate simple roots.

use num_complex::Complex64;

pub const MAX_ITERATIONS: usize = 500;
pub const RESIDUAL_TARGET: f64 = 1e-10;
pub const CLUSTER_RADIUS: f64 = 1e-7;

/// Horner evaluation; coefficients ascending.
pub fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

pub fn derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect()
}

fn coeff_scale(coeffs: &[Complex64]) -> f64 {
    coeffs.iter().map(|c| c.norm()).fold(1.0, f64::max)
}

/// All roots of a monic polynomial (ascending coefficients, leading 1),
/// as `(value, multiplicity)` pairs sorted by real then imaginary part.
pub fn roots(coeffs: &[Complex64]) -> Vec<(Complex64, usize)> {
    let degree = coeffs.len().saturating_sub(1);
    if degree == 0 {
        return vec![];
    }
    // Factor out roots at zero exactly: they are common and exact.
    let zero_count = coeffs
        .iter()
        .take_while(|c| c.norm() == 0.0)
        .count()
        .min(degree);
    let reduced: Vec<Complex64> = coeffs[zero_count..].to_vec();
    let mut found = durand_kerner(&reduced);
    if zero_count > 0 {
        found.push((Complex64::new(0.0, 0.0), zero_count));
    }
    found.sort_by(|a, b| {
        a.0.re
            .partial_cmp(&b.0.re)
            .unwrap()
            .then(a.0.im.partial_cmp(&b.0.im).unwrap())
    });
    // Merge anything the refinement brought together.
    let mut merged: Vec<(Complex64, usize)> = Vec::new();
    for (z, m) in found {
        match merged.last_mut() {
            Some((w, k)) if (*w - z).norm() <= CLUSTER_RADIUS => {
                let total = *k + m;
                *w = (*w * (*k as f64) + z * (m as f64)) / total as f64;
                *k = total;
            }
            _ => merged.push((z, m)),
        }
    }
    merged
}

fn durand_kerner(coeffs: &[Complex64]) -> Vec<(Complex64, usize)> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![(-coeffs[0], 1)];
    }
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    let scale = coeff_scale(coeffs);
    for _ in 0..MAX_ITERATIONS {
        let mut moved = 0.0f64;
        for k in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != k {
                    denom *= z[k] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // Coincident iterates; nudge deterministically.
                z[k] += Complex64::new(1e-6 * radius, 1e-6 * radius);
                continue;
            }
            let step = eval(coeffs, z[k]) / denom;
            z[k] -= step;
            moved = moved.max(step.norm());
        }
        if moved <= 1e-15 * radius {
            break;
        }
        // Absolute residual target; multiple roots stall above it and are
        // handled by the cluster refinement below.
        if z.iter().all(|&w| eval(coeffs, w).norm() <= RESIDUAL_TARGET) {
            break;
        }
    }
    refine_clusters(coeffs, z, scale)
}

/// Groups raw iterates into candidate clusters, polishes each candidate
/// m-fold root on the (m-1)-th derivative, and validates the refinement.
fn refine_clusters(
    coeffs: &[Complex64],
    mut z: Vec<Complex64>,
    scale: f64,
) -> Vec<(Complex64, usize)> {
    z.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let p_prime = derivative(coeffs);
    // Candidate grouping radius: generous enough to catch the eps^(1/m)
    // spread of a stalled multiple root; false groupings are rejected by the
    // residual validation below.
    let group_radius = |w: Complex64| 1e-2 * (1.0 + w.norm());
    let mut used = vec![false; z.len()];
    let mut out: Vec<(Complex64, usize)> = Vec::new();
    for i in 0..z.len() {
        if used[i] {
            continue;
        }
        let mut members = vec![i];
        for (j, flag) in used.iter().enumerate().skip(i + 1) {
            if !flag && (z[j] - z[i]).norm() <= group_radius(z[i]) {
                members.push(j);
            }
        }
        let m = members.len();
        let centroid = members.iter().map(|&j| z[j]).sum::<Complex64>() / m as f64;
        if m == 1 {
            used[i] = true;
            out.push((newton(&[coeffs.to_vec(), p_prime.clone()], centroid), 1));
            continue;
        }
        // Try an m-fold interpretation: Newton on p^(m-1).
        let mut derivs = vec![coeffs.to_vec()];
        for _ in 0..m - 1 {
            let last = derivs.last().unwrap();
            derivs.push(derivative(last));
        }
        let q = derivs[m - 1].clone();
        let q_prime = derivative(&q);
        let polished = newton(&[q, q_prime], centroid);
        let consistent = eval(coeffs, polished).norm() <= RESIDUAL_TARGET * scale
            && members
                .iter()
                .all(|&j| (z[j] - polished).norm() <= group_radius(polished));
        if consistent {
            for &j in &members {
                used[j] = true;
            }
            out.push((polished, m));
        } else {
            // Not a genuine multiple root: keep the members as simple roots.
            used[i] = true;
            out.push((newton(&[coeffs.to_vec(), p_prime.clone()], z[i]), 1));
        }
    }
    out
}

/// A few Newton steps of `f/f'` given `[f, f']`.
fn newton(f_and_deriv: &[Vec<Complex64>], start: Complex64) -> Complex64 {
    let (f, fp) = (&f_and_deriv[0], &f_and_deriv[1]);
    let mut zk = start;
    for _ in 0..60 {
        let dv = eval(fp, zk);
        if dv.norm() == 0.0 {
            break;
        }
        let step = eval(f, zk) / dv;
        zk -= step;
        if step.norm() <= 1e-15 * (1.0 + zk.norm()) {
            break;
        }
    }
    if zk.is_finite() {
        zk
    } else {
        start
    }
}
