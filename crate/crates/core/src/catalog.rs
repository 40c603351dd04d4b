//! Builtin group constructors addressable by name.
//!
//! Canonical labelings:
//! - `trivial` — the one-element group, labeled `1`.
//! - `C1`..`C16` — cyclic groups with labels `1, g, g^2, …`.
//! - `K4` — the Klein four-group with labels `e, a, b, c`.
//! - `D8`, `D12` — dihedral groups of orders 8 and 12 presented as
//!   `⟨r, s | r^m = s^2 = 1, rsr = s⟩`, labels `1, r, …, s, rs, …`.
//! - `Q8` — quaternion group, labels `1, -1, i, -i, j, -j, k, -k`.
//! - `S3`, `S4`, `A4`, `A5` — permutation groups in cycle notation with the
//!   identity labeled `e`.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// Builds a named catalog group. Names are matched case-insensitively.
pub fn catalog(name: &str) -> Result<FiniteGroup> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "trivial" => cyclic(1),
        "k4" => klein_four(),
        "d8" => dihedral(4),
        "d12" => dihedral(6),
        "q8" => quaternion(),
        "s3" => permutation_group(3, &["(1 2)", "(1 2 3)"]),
        "s4" => permutation_group(4, &["(1 2)", "(1 2 3 4)"]),
        "a4" => permutation_group(4, &["(1 2 3)", "(1 2)(3 4)"]),
        "a5" => permutation_group(5, &["(1 2 3)", "(1 2 3 4 5)"]),
        _ => {
            if let Some(digits) = lower.strip_prefix('c') {
                if let Ok(n) = digits.parse::<usize>() {
                    if (1..=16).contains(&n) {
                        return cyclic(n);
                    }
                }
            }
            Err(Error::UnknownCatalogName(name.to_string()))
        }
    }
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    FiniteGroup::from_table(&table, Some(labels))
}

fn klein_four() -> Result<FiniteGroup> {
    // XOR on {0,1,2,3} is the Klein four-group.
    let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    let labels = ["e", "a", "b", "c"].map(String::from).to_vec();
    FiniteGroup::from_table(&table, Some(labels))
}

/// Dihedral group of order `2m`: elements `r^i s^j` with
/// `s r = r⁻¹ s`, indexed as `j * m + i`.
fn dihedral(m: usize) -> Result<FiniteGroup> {
    let order = 2 * m;
    let idx = |i: usize, j: usize| j * m + i;
    let mut table = vec![vec![0usize; order]; order];
    for i1 in 0..m {
        for j1 in 0..2 {
            for i2 in 0..m {
                for j2 in 0..2 {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 ± i2) s^(j1+j2)
                    let exponent = if j1 == 0 {
                        (i1 + i2) % m
                    } else {
                        (i1 + m - i2) % m
                    };
                    table[idx(i1, j1)][idx(i2, j2)] = idx(exponent, (j1 + j2) % 2);
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(order);
    for j in 0..2 {
        for i in 0..m {
            let rotation = match i {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{i}"),
            };
            let label = match (rotation.as_str(), j == 0) {
                ("", true) => "1".to_string(),
                ("", false) => "s".to_string(),
                (rot, true) => rot.to_string(),
                (rot, false) => format!("{rot}s"),
            };
            labels.push(label);
        }
    }
    FiniteGroup::from_table(&table, Some(labels))
}

fn quaternion() -> Result<FiniteGroup> {
    // Element k = 2*b + s encodes sign s over base b in {1, i, j, k}.
    let base_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (1, 1) | (2, 2) | (3, 3) => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let table: Vec<Vec<usize>> = (0..8)
        .map(|a: usize| {
            (0..8)
                .map(|b: usize| {
                    let (base, flip) = base_mul(a / 2, b / 2);
                    let sign = (a % 2) ^ (b % 2) ^ usize::from(flip);
                    base * 2 + sign
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(String::from)
        .to_vec();
    FiniteGroup::from_table(&table, Some(labels))
}

fn permutation_group(degree: usize, generators: &[&str]) -> Result<FiniteGroup> {
    let gens: Vec<Permutation> = generators
        .iter()
        .map(|text| Permutation::parse_cycles(degree, text))
        .collect::<Result<_>>()?;
    FiniteGroup::from_permutation_generators(degree, &gens)
}
