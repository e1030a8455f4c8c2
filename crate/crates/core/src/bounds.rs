//! Closed-form colour bounds, in exact integer arithmetic.
//!
//! Every logarithm is taken through bit lengths or power comparisons; no
//! floating point is involved.

use std::fmt::Write;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest `k` accepted by the bound functions; keeps `k^3` within 64 bits.
pub const MAX_K: u64 = 1 << 20;

fn check_range(x: u64, min: u64, max: u64) -> Result<()> {
    if x < min {
        return Err(Error::InvalidParameter(format!(
            "argument {x} is below {min}"
        )));
    }
    if x > max {
        return Err(Error::TooLarge {
            what: "argument",
            size: x as u128,
            limit: max as u128,
        });
    }
    Ok(())
}

fn check_k(k: u64, min: u64) -> Result<()> {
    check_range(k, min, MAX_K)
}

/// `floor(log2 x)` for `x >= 1`.
fn floor_log2(x: u64) -> u32 {
    63 - x.leading_zeros()
}

/// `ceil(log2 x)` for `x >= 1`.
fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        floor_log2(x - 1) + 1
    }
}

/// `floor(3 log2 k)`: the largest `t` with `2^t <= k^3`.
pub fn theorem1_bound(k: u64) -> Result<u32> {
    check_k(k, 2)?;
    Ok(floor_log2(k * k * k))
}

/// `floor(log2 k) + 1`.
pub fn lower_bound(k: u64) -> Result<u32> {
    check_k(k, 2)?;
    Ok(floor_log2(k) + 1)
}

/// Tree-depth of the cycle `C_m`: `1 + ceil(log2 m)`.
pub fn td_cycle(m: u64) -> Result<u32> {
    check_range(m, 3, MAX_K + 1)?;
    Ok(1 + ceil_log2(m))
}

/// Tree-depth of the path `P_m`: `ceil(log2(m + 1))`.
pub fn td_path(m: u64) -> Result<u32> {
    check_range(m, 1, MAX_K + 1)?;
    Ok(ceil_log2(m + 1))
}

/// `ceil(log2(k + 1))`, the value `f(k)` would take if the defective
/// chromatic number of graphs excluding `C_{k+1}` equals its tree-depth
/// lower bound.
pub fn conjectured_f(k: u64) -> Result<u32> {
    check_k(k, 2)?;
    Ok(ceil_log2(k + 1))
}

/// `max(2, ceil((k - 7) / 2))`: circumference bound for `G - V(Q)` in the
/// cycle-deletion step.
pub fn deletion_bound(k: u64) -> Result<u64> {
    check_k(k, 2)?;
    // ceil(x / 2) = floor((x + 1) / 2), also for negative x.
    let half = (k as i64 - 6).div_euclid(2);
    Ok(half.max(2) as u64)
}

fn h_table() -> &'static [u8] {
    static TABLE: OnceLock<Vec<u8>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![0u8; MAX_K as usize + 1];
        for k in 2..=MAX_K as usize {
            t[k] = match k {
                2 => 2,
                3..=9 => 5,
                // ceil((k - 7) / 2) < k, so the entry is already filled in.
                _ => t[(k - 7).div_ceil(2)] + 3,
            };
        }
        t
    })
}

/// The recurrence `h(2) = 2`, `h(k) = 5` for `3 <= k <= 9`, and
/// `h(k) = h(ceil((k - 7) / 2)) + 3` for `k >= 10`.
pub fn h(k: u64) -> Result<u32> {
    check_k(k, 2)?;
    Ok(u32::from(h_table()[k as usize]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundTableRow {
    pub k: u64,
    pub theorem1: u32,
    pub h: u32,
    pub lower: u32,
    pub td_cycle: u32,
    pub td_path: u32,
    pub conjectured_f: u32,
}

impl BoundTableRow {
    pub fn new(k: u64) -> Result<Self> {
        Ok(BoundTableRow {
            k,
            theorem1: theorem1_bound(k)?,
            h: h(k)?,
            lower: lower_bound(k)?,
            td_cycle: td_cycle(k + 1)?,
            td_path: td_path(k + 1)?,
            conjectured_f: conjectured_f(k)?,
        })
    }
}

pub const BOUND_TABLE_HEADER: &str = "k,theorem1,h,lower,td_cycle,td_path,conjectured_f";

/// CSV table for `k = 2..=kmax`.
pub fn bound_table_csv(kmax: u64) -> Result<String> {
    check_k(kmax, 2)?;
    let mut out = String::new();
    writeln!(out, "{BOUND_TABLE_HEADER}").unwrap();
    for k in 2..=kmax {
        let r = BoundTableRow::new(k)?;
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.k, r.theorem1, r.h, r.lower, r.td_cycle, r.td_path, r.conjectured_f
        )
        .unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Largest t with 2^t <= k^3, by repeated doubling.
    fn floor_3log2_by_powers(k: u64) -> u32 {
        let cube = (k as u128).pow(3);
        let mut t = 0;
        while 1u128 << (t + 1) <= cube {
            t += 1;
        }
        t
    }

    #[test]
    fn theorem1_examples() {
        assert_eq!(theorem1_bound(2).unwrap(), 3);
        assert_eq!(theorem1_bound(4).unwrap(), 6);
        assert_eq!(theorem1_bound(9).unwrap(), 9);
        for k in 2..5000 {
            assert_eq!(
                theorem1_bound(k).unwrap(),
                floor_3log2_by_powers(k),
                "k = {k}"
            );
        }
        assert_eq!(theorem1_bound(MAX_K).unwrap(), 60);
    }

    #[test]
    fn h_examples() {
        assert_eq!(h(2).unwrap(), 2);
        assert_eq!(h(3).unwrap(), 5);
        assert_eq!(h(9).unwrap(), 5);
        assert_eq!(h(10).unwrap(), 5);
        assert_eq!(h(25).unwrap(), 8);
    }

    #[test]
    fn tree_depth_examples() {
        assert_eq!(td_cycle(4).unwrap(), 3);
        assert_eq!(td_cycle(8).unwrap(), 4);
        assert_eq!(td_cycle(9).unwrap(), 5);
        assert_eq!(td_path(1).unwrap(), 1);
        assert_eq!(td_path(7).unwrap(), 3);
        assert_eq!(td_path(8).unwrap(), 4);
        assert_eq!(conjectured_f(3).unwrap(), 2);
        assert_eq!(conjectured_f(4).unwrap(), 3);
        assert_eq!(conjectured_f(8).unwrap(), 4);
    }

    #[test]
    fn lower_and_deletion_examples() {
        assert_eq!(lower_bound(2).unwrap(), 2);
        assert_eq!(lower_bound(8).unwrap(), 4);
        assert_eq!(lower_bound(9).unwrap(), 4);
        assert_eq!(deletion_bound(9).unwrap(), 2);
        assert_eq!(deletion_bound(11).unwrap(), 2);
        assert_eq!(deletion_bound(12).unwrap(), 3);
        assert_eq!(deletion_bound(21).unwrap(), 7);
        assert_eq!(deletion_bound(2).unwrap(), 2);
    }

    #[test]
    fn guards() {
        assert!(theorem1_bound(1).is_err());
        assert!(h(1).is_err());
        assert!(lower_bound(0).is_err());
        assert!(td_cycle(2).is_err());
        assert!(td_path(0).is_err());
        assert!(conjectured_f(1).is_err());
        assert!(deletion_bound(1).is_err());
        assert!(theorem1_bound(MAX_K + 1).is_err());
    }

    #[test]
    fn table_rows() {
        let csv = bound_table_csv(8).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], BOUND_TABLE_HEADER);
        assert_eq!(lines[1], "2,3,2,2,3,2,2");
        assert_eq!(lines[7], "8,9,5,4,5,4,4");
        assert!(bound_table_csv(1).is_err());
    }
}
