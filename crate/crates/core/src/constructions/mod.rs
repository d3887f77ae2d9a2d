//! Closed-form bounds and explicit labelings of lexicographic products.
//!
//! Every labeling returned here can be checked with
//! [`crate::distinguishing::is_distinguishing`] or
//! [`crate::distinguishing::is_distinguishing_edges`]. Formulas use exact
//! integer arithmetic.

mod edge;
mod vertex;

pub use edge::{
    edge_label_gp2, edge_label_k2h, edge_label_path, edge_label_power, edge_label_small_g,
    edge_label_star, edge_label_thm31, star_capacity_k2, star_columns, EdgeBundle, LMatrix,
};
pub use vertex::{
    label_product_upper, label_thm22, power_dnum_bounds, spider_labeling, ReplacementPattern,
};

use crate::error::{Error, Result};

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1)
        acc = match acc.checked_mul(u128::from(n - i)) {
            Some(x) => x / u128::from(i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of new label patterns available with exactly `m` new labels on
/// top of `dh` original ones.
pub fn y_value(m: u32, dh: u32) -> u128 {
    match m {
        0 => 1,
        1 => u128::from(dh),
        _ => (1..m).fold(u128::from(dh), |acc, i| {
            let term = binom(u64::from(m - 1), u64::from(i))
                .saturating_mul(binom(u64::from(dh), u64::from(i) + 1));
            acc.saturating_add(term)
        }),
    }
}

/// Least `k` with `y_0 + ... + y_k >= dg`.
pub fn m_value(dg: u32, dh: u32) -> u32 {
    let mut sum: u128 = 0;
    let mut k = 0;
    loop {
        sum = sum.saturating_add(y_value(k, dh));
        if sum >= u128::from(dg) {
            return k;
        }
        k += 1;
    }
}

/// Upper bound `D(G) D(H)` on `D(G[H])`.
pub fn thm21_bound(dg: u32, dh: u32) -> u64 {
    u64::from(dg) * u64::from(dh)
}

/// Upper bound `D(H) + M` on `D(G[H])` when the automorphism group of the
/// product is the wreath product.
pub fn thm22_bound(dg: u32, dh: u32) -> u32 {
    dh + m_value(dg, dh)
}

/// `D(G_n[K_2])` for the spider `G_n`: the least `r` with `C(r, 2)^2 >= n`,
/// via the closed form `ceil((1 + sqrt(1 + 8 sqrt(n))) / 2)`.
pub fn spider_dnum_k2(n: u64) -> Result<u32> {
    if n < 3 {
        return Err(Error::FamilyParameter {
            family: "spider",
            param: n as usize,
            min: 3,
        });
    }
    let r = n.isqrt();
    let s = if r * r == n { r } else { r + 1 };
    let q = (1 + 8 * s).isqrt();
    let r = if q * q == 1 + 8 * s { q.div_ceil(2) } else { (q + 3) / 2 };
    Ok(r as u32)
}

/// Number of edge classes of `G` that can be told apart in `G[P_2]` using
/// exactly `m` as the largest label.
pub fn t35_capacity(m: u32) -> Result<u128> {
    if m < 2 {
        return Err(Error::Precondition("capacity is defined for m >= 2".into()));
    }
    let m1 = u64::from(m - 1);
    Ok(2 * binom(m1, 1) + u128::from(m) * binom(m1, 2) + binom(m1, 3))
}

/// Least `k >= 1` with `capacity(2) + ... + capacity(k) >= d_prime`.
pub fn t35_bound(d_prime: u32) -> u32 {
    let mut sum: u128 = 0;
    let mut k = 1;
    while sum < u128::from(d_prime) {
        k += 1;
        sum += t35_capacity(k).expect("k >= 2");
    }
    k
}

/// Tier-`m` label tuples in canonical order: `(a,a,a,m)` and `(a,m,m,m)` for
/// each `a < m`, then `(a,b,m,x)` for `a < b < m` and `x` in `1..=m`, then
/// `(a,b,c,m)` for `a < b < c < m`.
pub fn t35_tuples(m: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 1..m {
        out.push([a, a, a, m]);
        out.push([a, m, m, m]);
    }
    for a in 1..m {
        for b in a + 1..m {
            for x in 1..=m {
                out.push([a, b, m, x]);
            }
        }
    }
    for a in 1..m {
        for b in a + 1..m {
            for c in b + 1..m {
                out.push([a, b, c, m]);
            }
        }
    }
    out
}

/// Least `d` with `d^(m^2) >= n`.
pub fn star_root(n: u64, m: u32) -> u32 {
    let e = m * m;
    let mut d: u32 = 1;
    while u128::from(d)
        .checked_pow(e)
        .is_some_and(|p| p < u128::from(n))
    {
        d += 1;
    }
    d
}

/// Claimed bound on `D'(K_{1,n}[H])` for `|V(H)| = m`:
/// `max{D'(H), d}` with `d = star_root(n, m)`, plus one when `m = 2` and
/// `n = d^4`.
pub fn star_bound(n: u64, m: u32, dh_prime: u32) -> u32 {
    let d = star_root(n, m);
    let extra = u32::from(m == 2 && u128::from(d).pow(4) == u128::from(n));
    dh_prime.max(d) + extra
}

/// Bounds on `D(G^k)` from `D(G)`: `(1, 1)` when `D(G) = 1`, else
/// `(D(G), D(G) + k - 1)`.
pub fn power_bounds_from(dg: u32, k: u32) -> (u32, u32) {
    if dg == 1 {
        (1, 1)
    } else {
        (dg, dg + k.saturating_sub(1))
    }
}

/// Ranks the distinct values of `labels` as `1, 2, ...` in increasing order.
pub(crate) fn compress(labels: &[u32]) -> Vec<u32> {
    let mut distinct = labels.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    labels
        .iter()
        .map(|l| distinct.binary_search(l).unwrap() as u32 + 1)
        .collect()
}
