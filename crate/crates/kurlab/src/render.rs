//! Text encodings shared by the commands: DOT, CSV and exact decimals.

use std::fmt::Write;

use kurlab_core::rewrite::{hasse_edges, FreeKuratowskiMonoid};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

/// The covering relation as a DOT digraph, smaller elements at the bottom.
pub fn hasse_dot(m: &FreeKuratowskiMonoid) -> String {
    let chain = m.chain();
    let mut s = String::new();
    let _ = writeln!(s, "digraph fk_{}_{} {{", chain.n_neg(), chain.n_pos());
    s.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, w) in m.elements().iter().enumerate() {
        let _ = writeln!(s, "  n{i} [label=\"{w}\"];");
    }
    for (i, j) in hasse_edges(m) {
        let _ = writeln!(s, "  n{i} -> n{j};");
    }
    s.push_str("}\n");
    s
}

/// Rows `n`, columns `p`, with a header row of column indices.
pub fn grid_csv(grid: &[Vec<BigUint>]) -> String {
    let mut s = String::from("n\\p");
    for p in 0..grid.first().map_or(0, Vec::len) {
        let _ = write!(s, ",{p}");
    }
    s.push('\n');
    for (n, row) in grid.iter().enumerate() {
        let _ = write!(s, "{n}");
        for k in row {
            let _ = write!(s, ",{k}");
        }
        s.push('\n');
    }
    s
}

/// Right-aligned columns for terminals.
pub fn grid_text(grid: &[Vec<BigUint>]) -> String {
    let cells: Vec<Vec<String>> = grid
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    let cols = cells.first().map_or(0, Vec::len);
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(1)
        .max(cols.to_string().len());
    let lead = grid.len().to_string().len().max(3);
    let mut s = format!("{:>lead$}", "n\\p");
    for p in 0..cols {
        let _ = write!(s, " {p:>width$}");
    }
    s.push('\n');
    for (n, row) in cells.iter().enumerate() {
        let _ = write!(s, "{n:>lead$}");
        for c in row {
            let _ = write!(s, " {c:>width$}");
        }
        s.push('\n');
    }
    s
}

/// `q` rounded down to `digits` decimal places.
pub fn decimal(q: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10u8), digits);
    let scaled = (q.numer() * &scale).div_floor(q.denom());
    let neg = q.is_negative();
    let (int, frac) = scaled.abs().div_rem(&scale);
    let frac = frac.to_string();
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{}{frac}", "0".repeat(digits - frac.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals() {
        let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(decimal(&q(7, 4), 3), "1.750");
        assert_eq!(decimal(&q(1, 3), 4), "0.3333");
        assert_eq!(decimal(&q(1, 200), 2), "0.00");
        assert_eq!(decimal(&q(5, 1), 0), "5");
    }

    #[test]
    fn csv_layout() {
        let g = vec![
            vec![BigUint::from(1u8), BigUint::from(2u8)],
            vec![BigUint::from(2u8), BigUint::from(7u8)],
        ];
        assert_eq!(grid_csv(&g), "n\\p,0,1\n0,1,2\n1,2,7\n");
    }
}
