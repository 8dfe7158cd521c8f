//! Multiplication-table backed groups, the `table:` file format, and
//! constructors for the standard small-group families.

use crate::error::{Error, Result};
use std::path::Path;

/// A group given by its full multiplication table. Element `0` is the
/// identity; `table[a * order + b]` is the product `a·b`.
#[derive(Debug, Clone)]
pub struct MulTable {
    pub order: usize,
    pub table: Vec<u32>,
    pub inverse: Vec<u32>,
}

impl MulTable {
    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let p = mul(a, b);
                if p >= order {
                    return Err(Error::invalid(format!("product {a}·{b}={p} out of range")));
                }
                table[a * order + b] = p as u32;
            }
        }
        let mut t = MulTable {
            order,
            table,
            inverse: Vec::new(),
        };
        t.validate()?;
        Ok(t)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    /// Checks the group axioms: identity at index 0, Latin-square rows and
    /// columns, inverses, and associativity (exhaustive for order <= 256,
    /// sampled on a fixed grid above that).
    pub fn validate(&mut self) -> Result<()> {
        let n = self.order;
        if n == 0 {
            return Err(Error::invalid("empty multiplication table"));
        }
        if self.table.len() != n * n {
            return Err(Error::invalid("table size does not match order"));
        }
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::invalid(format!("index 0 is not an identity at {a}")));
            }
        }
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for a in 0..n {
            seen_row.iter_mut().for_each(|s| *s = false);
            seen_col.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let r = self.mul(a, b);
                let c = self.mul(b, a);
                if seen_row[r] || seen_col[c] {
                    return Err(Error::invalid(format!(
                        "row or column {a} is not a bijection"
                    )));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        self.inverse = vec![0u32; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| self.mul(a, b) == 0)
                .ok_or_else(|| Error::invalid(format!("no inverse for {a}")))?;
            if self.mul(inv, a) != 0 {
                return Err(Error::invalid(format!("one-sided inverse at {a}")));
            }
            self.inverse[a] = inv as u32;
        }
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::invalid(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let step = n / 64 + 1;
            for a in (0..n).step_by(step) {
                for b in (0..n).step_by(step) {
                    for c in (0..n).step_by(step) {
                        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::invalid(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Reads the table file format: line 1 is the order `n`, each of the next
    /// `n` lines holds `n` space-separated element indices (row `a`, column
    /// `b` is `a·b`). The identity must be index 0.
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse_text(&text)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::parse("empty table file"))?
            .trim()
            .parse()
            .map_err(|_| Error::parse("first line must be the group order"))?;
        let mut table = Vec::with_capacity(n * n);
        for row in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::parse(format!("missing table row {row}")))?;
            let entries: Vec<u32> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::parse(format!("bad entry '{t}'")))
                })
                .collect::<Result<_>>()?;
            if entries.len() != n {
                return Err(Error::parse(format!(
                    "row {row} has {} entries, expected {n}",
                    entries.len()
                )));
            }
            if entries.iter().any(|&e| e as usize >= n) {
                return Err(Error::parse(format!("row {row} has an out-of-range entry")));
            }
            table.extend_from_slice(&entries);
        }
        let mut t = MulTable {
            order: n,
            table,
            inverse: Vec::new(),
        };
        t.validate()?;
        Ok(t)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for a in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|b| self.mul(a, b).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

/// Dihedral group of order `2m`: rotations `(i, 0)` and reflections `(i, 1)`.
pub fn dihedral(m: usize) -> Result<MulTable> {
    if m == 0 {
        return Err(Error::invalid("dihedral parameter must be positive"));
    }
    MulTable::from_fn(2 * m, |a, b| {
        let (i, s) = (a % m, a / m);
        let (j, t) = (b % m, b / m);
        let rot = if s == 0 { (i + j) % m } else { (i + m - j) % m };
        rot + ((s + t) % 2) * m
    })
}

/// Dicyclic group of order `4m` (`m = 2` gives the quaternion group):
/// elements `a^i x^j` with `x a x^{-1} = a^{-1}` and `x^2 = a^m`.
pub fn dicyclic(m: usize) -> Result<MulTable> {
    if m == 0 {
        return Err(Error::invalid("dicyclic parameter must be positive"));
    }
    let n = 2 * m;
    MulTable::from_fn(4 * m, |a, b| {
        let (i, s) = (a % n, a / n);
        let (j, t) = (b % n, b / n);
        if s == 0 {
            (i + j) % n + t * n
        } else if t == 0 {
            (i + n - j) % n + n
        } else {
            (i + n - j + m) % n
        }
    })
}

/// Semidirect product `Z_a ⋊ Z_b` where the generator of `Z_b` acts on `Z_a`
/// by multiplication by `t` (requires `t^b = 1 mod a`).
pub fn semidirect_cyclic(a: usize, b: usize, t: usize) -> Result<MulTable> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("cyclic factors must be nontrivial"));
    }
    let mut pow = 1usize;
    for _ in 0..b {
        pow = pow * t % a;
    }
    if pow != 1 {
        return Err(Error::invalid(format!(
            "t={t} has order not dividing {b} mod {a}"
        )));
    }
    let powers: Vec<usize> = {
        let mut v = Vec::with_capacity(b);
        let mut acc = 1usize;
        for _ in 0..b {
            v.push(acc);
            acc = acc * t % a;
        }
        v
    };
    MulTable::from_fn(a * b, move |x, y| {
        let (i, s) = (x % a, x / a);
        let (j, u) = (y % a, y / a);
        (i + powers[s] * j) % a + ((s + u) % b) * a
    })
}

/// `(Z_2 x Z_2) ⋊ Z_4` with the generator of `Z_4` swapping the coordinates.
pub fn klein_by_z4_swap() -> Result<MulTable> {
    MulTable::from_fn(16, |x, y| {
        let (v, s) = (x % 4, x / 4);
        let (w, u) = (y % 4, y / 4);
        let w_acted = if s % 2 == 0 {
            w
        } else {
            (w & 1) << 1 | (w >> 1)
        };
        (v ^ w_acted) + ((s + u) % 4) * 4
    })
}

/// Direct product of two tables.
pub fn product(g: &MulTable, h: &MulTable) -> Result<MulTable> {
    let (n, m) = (g.order, h.order);
    MulTable::from_fn(n * m, |x, y| {
        let (a1, a2) = (x / m, x % m);
        let (b1, b2) = (y / m, y % m);
        g.mul(a1, b1) * m + h.mul(a2, b2)
    })
}

/// Quotient of `g` by a central subgroup given as a sorted element list.
/// Cosets are renumbered with the identity coset first.
pub fn central_quotient(g: &MulTable, center: &[usize]) -> Result<MulTable> {
    for &z in center {
        for a in 0..g.order {
            if g.mul(z, a) != g.mul(a, z) {
                return Err(Error::invalid(format!("element {z} is not central")));
            }
        }
    }
    // coset representative = least element of the coset
    let mut rep = vec![usize::MAX; g.order];
    for a in 0..g.order {
        let r = center.iter().map(|&z| g.mul(a, z)).min().unwrap().min(a);
        rep[a] = r;
    }
    let mut reps: Vec<usize> = rep
        .iter()
        .copied()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    reps.sort_unstable();
    if reps[0] != 0 {
        return Err(Error::invalid("identity coset must contain 0"));
    }
    let index_of = |r: usize| reps.binary_search(&r).unwrap();
    MulTable::from_fn(reps.len(), |x, y| index_of(rep[g.mul(reps[x], reps[y])]))
}
