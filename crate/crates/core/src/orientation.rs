//! Relative-orientability checks and enumeration of countable cases.
//!
//! A degree profile admits a well-defined signed count exactly when the
//! section bundle is relatively oriented: the rank matches the dimension
//! (`sum(3m_i + 1) = 4n`), every degree is odd, the number of degrees
//! congruent to 3 mod 4 is even, and the number of factors `r` has parity
//! opposite to `n`. Profiles with an even degree have vanishing Euler
//! class instead, which the report tracks separately.

use crate::arith::orientation_constants;
use crate::localization::DegreeProfile;
use serde::Serialize;

/// Outcome of the orientability decision procedure for one profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationReport {
    /// `sum(3m_i + 1) = 4n`.
    pub rank_ok: bool,
    /// Every degree odd.
    pub all_odd: bool,
    /// Number of degrees congruent to 3 mod 4.
    pub count_neg_mod4: usize,
    /// `n` odd requires `r` even; `n` even requires `r` odd.
    pub r_parity_ok: bool,
    pub orientable: bool,
    /// Some degree is even, so the Euler class (and the count) vanishes.
    pub vanishing: bool,
}

impl OrientationReport {
    /// Human-readable list of the violated congruences, empty when
    /// orientable.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.rank_ok {
            out.push("rank/dimension mismatch: sum(3m_i + 1) != 4n".to_string());
        }
        if !self.all_odd {
            out.push("even degree present".to_string());
        }
        if self.count_neg_mod4 % 2 != 0 {
            out.push(format!(
                "number of degrees congruent to 3 mod 4 is odd ({})",
                self.count_neg_mod4
            ));
        }
        if !self.r_parity_ok {
            out.push("parity mismatch: need n even <=> r odd".to_string());
        }
        out
    }
}

/// Decides relative orientability of a profile.
pub fn check(profile: &DegreeProfile) -> OrientationReport {
    let n = profile.n();
    let degrees = profile.degrees();
    let r = degrees.len();
    let rank: i64 = degrees.iter().map(|&m| 3 * m + 1).sum();
    let rank_ok = rank == 4 * n as i64;
    let all_odd = degrees.iter().all(|&m| m % 2 != 0);
    let count_neg_mod4 = degrees.iter().filter(|&&m| m.rem_euclid(4) == 3).count();
    let r_parity_ok = (n % 2 == 0) == (r % 2 == 1);
    let orientable = rank_ok && all_odd && count_neg_mod4 % 2 == 0 && r_parity_ok;
    OrientationReport {
        rank_ok,
        all_odd,
        count_neg_mod4,
        r_parity_ok,
        orientable,
        vanishing: !all_odd,
    }
}

/// Parity diagnostics of the determinant exponents for a single degree:
/// `M_m` is odd exactly for `m = 1 mod 4`, and `K_m` is even exactly for
/// `m = 1 mod 4` (odd `m`). Cross-checks the congruence formulation of
/// the orientability conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantParity {
    pub m: i64,
    pub m_m_odd: bool,
    pub k_m_odd: bool,
}

pub fn constants_parity(m: i64) -> Option<ConstantParity> {
    use num_integer::Integer;
    let c = orientation_constants(m).ok()?;
    Some(ConstantParity {
        m,
        m_m_odd: c.m_m.is_odd(),
        k_m_odd: c.k_m.is_odd(),
    })
}

/// All relatively orientable profiles with `4 <= n <= n_max` and odd
/// degrees `>= 3`, deduplicated as multisets (degrees ascending).
pub fn enumerate_orientable(n_max: usize) -> Vec<DegreeProfile> {
    let mut out = Vec::new();
    for n in 4..=n_max.max(3) {
        let target = 4 * n as i64;
        let mut stack: Vec<i64> = Vec::new();
        collect_profiles(n, target, 3, &mut stack, &mut out);
    }
    out
}

fn collect_profiles(
    n: usize,
    remaining: i64,
    min_degree: i64,
    stack: &mut Vec<i64>,
    out: &mut Vec<DegreeProfile>,
) {
    if remaining == 0 {
        if let Ok(profile) = DegreeProfile::new(n, stack.clone()) {
            if check(&profile).orientable {
                out.push(profile);
            }
        }
        return;
    }
    // each factor consumes 3m + 1 >= 10 of the remaining rank
    let mut m = min_degree;
    while 3 * m < remaining {
        if m % 2 != 0 {
            stack.push(m);
            collect_profiles(n, remaining - (3 * m + 1), m, stack, out);
            stack.pop();
        }
        m += 2;
    }
}
