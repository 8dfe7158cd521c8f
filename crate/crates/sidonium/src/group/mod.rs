//! Finite groups over dense element indices `0..order-1`.
//!
//! Cyclic and table-backed groups store their structure directly; symmetric
//! and alternating groups work through Lehmer rank/unrank so that no
//! multiplication table is ever materialized; `os:p,k` groups are the
//! extension of the multiplicative group of `GF(p^k)` by its Frobenius
//! automorphism, of order `(p^k - 1) k`.

pub mod catalog;
mod field;
pub mod perm;
pub mod table;

use crate::error::{Error, Result};
use field::SmallField;
pub use perm::Permutation;
use std::fmt;
use std::path::PathBuf;
pub use table::MulTable;

/// Default cap on the order of a constructed group.
pub const DEFAULT_ORDER_CAP: u64 = 20160;

/// A parsed group description.
///
/// Grammar: `S:<n>` | `A:<n>` | `Z:<n>` | `prod(<spec>,<spec>)` |
/// `table:<path>` | `os:<p>,<k>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Table(PathBuf),
    FieldAutomorphism { p: u64, k: u32 },
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if let Some(rest) = t.strip_prefix("prod(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(format!("unbalanced parentheses in '{t}'")))?;
            let mut depth = 0usize;
            let mut split = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth = depth.checked_sub(1).ok_or_else(|| {
                            Error::parse(format!("unbalanced parentheses in '{t}'"))
                        })?
                    }
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let i =
                split.ok_or_else(|| Error::parse(format!("prod needs two components: '{t}'")))?;
            let left = GroupSpec::parse(&inner[..i])?;
            let right = GroupSpec::parse(&inner[i + 1..])?;
            return Ok(GroupSpec::Product(Box::new(left), Box::new(right)));
        }
        if let Some(path) = t.strip_prefix("table:") {
            if path.is_empty() {
                return Err(Error::parse("table: needs a path"));
            }
            return Ok(GroupSpec::Table(PathBuf::from(path)));
        }
        if let Some(args) = t.strip_prefix("os:") {
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::parse(format!("os needs 'os:<p>,<k>': '{t}'")));
            }
            let p: u64 = parts[0]
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad prime '{}'", parts[0])))?;
            let k: u32 = parts[1]
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent '{}'", parts[1])))?;
            if !field::is_prime(p) {
                return Err(Error::parse(format!("os: {p} is not prime")));
            }
            if k < 2 {
                return Err(Error::parse("os: k must be at least 2"));
            }
            if (p - 1) % k as u64 != 0 {
                return Err(Error::parse(format!(
                    "os: k={k} does not divide p-1={}",
                    p - 1
                )));
            }
            return Ok(GroupSpec::FieldAutomorphism { p, k });
        }
        let (kind, num) = t
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("unrecognized group spec '{t}'")))?;
        let n: usize = num
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad parameter '{num}'")))?;
        if n == 0 {
            return Err(Error::parse("group parameter must be at least 1"));
        }
        match kind.trim() {
            "S" => Ok(GroupSpec::Symmetric(n)),
            "A" => Ok(GroupSpec::Alternating(n)),
            "Z" => Ok(GroupSpec::Cyclic(n)),
            other => Err(Error::parse(format!("unknown group kind '{other}'"))),
        }
    }

    /// The order of the described group, before any cap check.
    pub fn order(&self) -> Result<u128> {
        Ok(match self {
            GroupSpec::Symmetric(n) => factorial_u128(*n)?,
            GroupSpec::Alternating(n) => {
                let f = factorial_u128(*n)?;
                if *n <= 1 {
                    1
                } else {
                    f / 2
                }
            }
            GroupSpec::Cyclic(n) => *n as u128,
            GroupSpec::Product(l, r) => l
                .order()?
                .checked_mul(r.order()?)
                .ok_or_else(|| Error::invalid("product order overflows"))?,
            GroupSpec::Table(path) => {
                let t = MulTable::read(path)?;
                t.order as u128
            }
            GroupSpec::FieldAutomorphism { p, k } => {
                let q = (*p as u128)
                    .checked_pow(*k)
                    .ok_or_else(|| Error::invalid("field size overflows"))?;
                (q - 1) * *k as u128
            }
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "S:{n}"),
            GroupSpec::Alternating(n) => write!(f, "A:{n}"),
            GroupSpec::Cyclic(n) => write!(f, "Z:{n}"),
            GroupSpec::Product(l, r) => write!(f, "prod({l},{r})"),
            GroupSpec::Table(p) => write!(f, "table:{}", p.display()),
            GroupSpec::FieldAutomorphism { p, k } => write!(f, "os:{p},{k}"),
        }
    }
}

fn factorial_u128(n: usize) -> Result<u128> {
    let mut f: u128 = 1;
    for i in 2..=n as u128 {
        f = f
            .checked_mul(i)
            .ok_or_else(|| Error::invalid("factorial overflows"))?;
    }
    Ok(f)
}

#[derive(Debug, Clone)]
enum Backend {
    Cyclic,
    Symmetric {
        n: usize,
    },
    Alternating {
        n: usize,
    },
    Product {
        left: Box<FiniteGroup>,
        right: Box<FiniteGroup>,
    },
    Table(MulTable),
    FieldAutomorphism(OsGroup),
}

/// Extension of the multiplicative group of `GF(p^k)` by Frobenius.
/// Element `j*(q-1) + (c-1)` is the pair (field code `c`, automorphism
/// power `j`); products follow `(f, i)(g, j) = (f · φ^i(g), i + j)`.
#[derive(Debug, Clone)]
struct OsGroup {
    q: usize,
    k: usize,
    field: SmallField,
    /// frob[j][c] = φ^j(c) for field codes c.
    frob: Vec<Vec<u32>>,
    inv: Vec<u32>,
}

impl OsGroup {
    fn new(p: u64, k: u32) -> Result<Self> {
        let field = SmallField::new(p, k)?;
        let q = field.size as usize;
        let mut frob = vec![vec![0u32; q]; k as usize];
        for c in 1..q {
            frob[0][c] = c as u32;
        }
        for j in 1..k as usize {
            for c in 1..q {
                frob[j][c] = field.frobenius(frob[j - 1][c] as u64) as u32;
            }
        }
        let mut inv = vec![0u32; q];
        for c in 1..q {
            inv[c] = field.inv(c as u64) as u32;
        }
        Ok(OsGroup {
            q,
            k: k as usize,
            field,
            frob,
            inv,
        })
    }

    fn decode(&self, e: usize) -> (usize, usize) {
        (e % (self.q - 1) + 1, e / (self.q - 1))
    }

    fn encode(&self, code: usize, j: usize) -> usize {
        j * (self.q - 1) + (code - 1)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (ca, ja) = self.decode(a);
        let (cb, jb) = self.decode(b);
        let acted = self.frob[ja][cb] as usize;
        let prod = self.field.mul(ca as u64, acted as u64) as usize;
        self.encode(prod, (ja + jb) % self.k)
    }

    fn inverse(&self, a: usize) -> usize {
        let (ca, ja) = self.decode(a);
        let jinv = (self.k - ja) % self.k;
        let cinv = self.inv[ca] as usize;
        self.encode(self.frob[jinv][cinv] as usize, jinv)
    }
}

/// A finite group over dense element indices; the identity is index 0.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    label: String,
    backend: Backend,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    fn check_index(&self, a: usize) -> Result<()> {
        if a >= self.order {
            Err(Error::IndexRange {
                index: a,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// Product of two elements; fails on out-of-range indices.
    pub fn multiply(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.mul(a, b))
    }

    /// Product of two valid element indices.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        match &self.backend {
            Backend::Cyclic => (a + b) % self.order,
            Backend::Symmetric { n } => {
                let pa = Permutation::unrank(*n, a as u64);
                let pb = Permutation::unrank(*n, b as u64);
                pa.compose(&pb).rank() as usize
            }
            Backend::Alternating { n } => {
                let pa = Permutation::unrank_even(*n, a as u64);
                let pb = Permutation::unrank_even(*n, b as u64);
                pa.compose(&pb).rank_even() as usize
            }
            Backend::Product { left, right } => {
                let m = right.order;
                left.mul(a / m, b / m) * m + right.mul(a % m, b % m)
            }
            Backend::Table(t) => t.mul(a, b),
            Backend::FieldAutomorphism(os) => os.mul(a, b),
        }
    }

    /// Inverse of an element; fails on out-of-range indices.
    pub fn inverse(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        Ok(self.inv(a))
    }

    pub fn inv(&self, a: usize) -> usize {
        debug_assert!(a < self.order);
        match &self.backend {
            Backend::Cyclic => (self.order - a) % self.order,
            Backend::Symmetric { n } => Permutation::unrank(*n, a as u64).inverse().rank() as usize,
            Backend::Alternating { n } => {
                Permutation::unrank_even(*n, a as u64).inverse().rank_even() as usize
            }
            Backend::Product { left, right } => {
                let m = right.order;
                left.inv(a / m) * m + right.inv(a % m)
            }
            Backend::Table(t) => t.inverse[a] as usize,
            Backend::FieldAutomorphism(os) => os.inverse(a),
        }
    }

    /// Conjugate `g a g^{-1}`.
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    /// Least `t >= 1` with `a^t = identity`.
    pub fn element_order(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        let mut x = a;
        let mut t = 1usize;
        while x != 0 {
            x = self.mul(x, a);
            t += 1;
        }
        Ok(t)
    }

    /// Number of elements of order exactly 2.
    pub fn count_involutions(&self) -> usize {
        (1..self.order).filter(|&a| self.mul(a, a) == 0).count()
    }

    /// The conjugacy class of `a` as a sorted element set.
    pub fn conjugacy_class(&self, a: usize) -> Result<ElementSet> {
        self.check_index(a)?;
        let mut members: Vec<usize> = self.elements().map(|g| self.conjugate(g, a)).collect();
        members.sort_unstable();
        members.dedup();
        Ok(ElementSet { members })
    }

    /// One representative per conjugacy class, each the least element of its
    /// class, in increasing order.
    pub fn conjugacy_class_representatives(&self) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut reps = Vec::new();
        for a in self.elements() {
            if seen[a] {
                continue;
            }
            reps.push(a);
            for g in self.elements() {
                seen[self.conjugate(g, a)] = true;
            }
        }
        reps
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in a + 1..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Permutation behind an element of `S:n` or `A:n`.
    pub fn permutation_of(&self, a: usize) -> Result<Permutation> {
        self.check_index(a)?;
        match &self.backend {
            Backend::Symmetric { n } => Ok(Permutation::unrank(*n, a as u64)),
            Backend::Alternating { n } => Ok(Permutation::unrank_even(*n, a as u64)),
            _ => Err(Error::invalid(format!(
                "{} is not a permutation group",
                self.label
            ))),
        }
    }

    /// Index of a permutation in `S:n` or `A:n`.
    pub fn index_of_permutation(&self, p: &Permutation) -> Result<usize> {
        match &self.backend {
            Backend::Symmetric { n } => {
                if p.degree() != *n {
                    return Err(Error::invalid("permutation degree mismatch"));
                }
                Ok(p.rank() as usize)
            }
            Backend::Alternating { n } => {
                if p.degree() != *n {
                    return Err(Error::invalid("permutation degree mismatch"));
                }
                if !p.is_even() {
                    return Err(Error::invalid(format!("{p} is odd")));
                }
                Ok(p.rank_even() as usize)
            }
            _ => Err(Error::invalid(format!(
                "{} is not a permutation group",
                self.label
            ))),
        }
    }

    /// Component groups of a product backend.
    pub fn product_components(&self) -> Option<(&FiniteGroup, &FiniteGroup)> {
        match &self.backend {
            Backend::Product { left, right } => Some((left, right)),
            _ => None,
        }
    }

    /// Splits a product-group element into its component indices.
    pub fn split_pair(&self, e: usize) -> Option<(usize, usize)> {
        match &self.backend {
            Backend::Product { right, .. } => Some((e / right.order, e % right.order)),
            _ => None,
        }
    }

    /// Joins component indices into a product-group element.
    pub fn join_pair(&self, l: usize, r: usize) -> Option<usize> {
        match &self.backend {
            Backend::Product { right, .. } => Some(l * right.order + r),
            _ => None,
        }
    }

    /// Human-readable rendering of an element.
    pub fn render(&self, a: usize) -> String {
        match &self.backend {
            Backend::Cyclic | Backend::Table(_) | Backend::FieldAutomorphism(_) => a.to_string(),
            Backend::Symmetric { n } => Permutation::unrank(*n, a as u64).to_string(),
            Backend::Alternating { n } => Permutation::unrank_even(*n, a as u64).to_string(),
            Backend::Product { left, right } => {
                let m = right.order;
                format!("({};{})", left.render(a / m), right.render(a % m))
            }
        }
    }

    /// Parses one element literal: `#<idx>` works for every group; cyclic,
    /// table, and field-automorphism groups read integers; permutation
    /// groups read cycle or one-line notation; product groups read
    /// `(<left>;<right>)` or an integer index.
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let t = text.trim();
        if let Some(idx) = t.strip_prefix('#') {
            let a: usize = idx
                .parse()
                .map_err(|_| Error::parse(format!("bad index '{t}'")))?;
            self.check_index(a)?;
            return Ok(a);
        }
        match &self.backend {
            Backend::Cyclic | Backend::Table(_) | Backend::FieldAutomorphism(_) => {
                let a: usize = t
                    .parse()
                    .map_err(|_| Error::parse(format!("bad element '{t}'")))?;
                self.check_index(a)?;
                Ok(a)
            }
            Backend::Symmetric { n } => {
                let p = Permutation::parse(*n, t)?;
                self.index_of_permutation(&p)
            }
            Backend::Alternating { n } => {
                let p = Permutation::parse(*n, t)?;
                self.index_of_permutation(&p)
            }
            Backend::Product { left, right } => {
                if let Some(inner) = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
                    let mut depth = 0usize;
                    let mut split = None;
                    for (i, c) in inner.char_indices() {
                        match c {
                            '(' => depth += 1,
                            ')' => depth = depth.saturating_sub(1),
                            ';' if depth == 0 => {
                                split = Some(i);
                                break;
                            }
                            _ => {}
                        }
                    }
                    if let Some(i) = split {
                        let l = left.parse_element(&inner[..i])?;
                        let r = right.parse_element(&inner[i + 1..])?;
                        return Ok(self.join_pair(l, r).unwrap());
                    }
                }
                let a: usize = t
                    .parse()
                    .map_err(|_| Error::parse(format!("bad product element '{t}'")))?;
                self.check_index(a)?;
                Ok(a)
            }
        }
    }

    /// Materializes the multiplication table (small groups only).
    pub fn to_table(&self) -> Result<MulTable> {
        if self.order > 4096 {
            return Err(Error::invalid(format!(
                "refusing to materialize a table of order {}",
                self.order
            )));
        }
        MulTable::from_fn(self.order, |a, b| self.mul(a, b))
    }

    pub fn from_table(table: MulTable, label: impl Into<String>) -> FiniteGroup {
        FiniteGroup {
            order: table.order,
            label: label.into(),
            backend: Backend::Table(table),
        }
    }

    /// Direct product with dense index `l * |right| + r`.
    pub fn direct_product(left: FiniteGroup, right: FiniteGroup) -> FiniteGroup {
        let order = left.order * right.order;
        let label = format!("prod({},{})", left.label, right.label);
        FiniteGroup {
            order,
            label,
            backend: Backend::Product {
                left: Box::new(left),
                right: Box::new(right),
            },
        }
    }
}

/// Builds the group described by `spec`, rejecting orders above the default
/// cap of 20160.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    build_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn build_group_with_cap(spec: &GroupSpec, cap: u64) -> Result<FiniteGroup> {
    let order = spec.order()?;
    if order > cap as u128 {
        return Err(Error::OrderCap { order, cap });
    }
    let order = order as usize;
    let label = spec.to_string();
    let backend = match spec {
        GroupSpec::Cyclic(_) => Backend::Cyclic,
        GroupSpec::Symmetric(n) => Backend::Symmetric { n: *n },
        GroupSpec::Alternating(n) => Backend::Alternating { n: *n },
        GroupSpec::Product(l, r) => Backend::Product {
            left: Box::new(build_group_with_cap(l, cap)?),
            right: Box::new(build_group_with_cap(r, cap)?),
        },
        GroupSpec::Table(path) => Backend::Table(MulTable::read(path)?),
        GroupSpec::FieldAutomorphism { p, k } => Backend::FieldAutomorphism(OsGroup::new(*p, *k)?),
    };
    Ok(FiniteGroup {
        order,
        label,
        backend,
    })
}

/// A sorted, duplicate-free set of element indices of some group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    members: Vec<usize>,
}

impl ElementSet {
    pub fn new(group: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = members.into_iter().collect();
        for &m in &v {
            group.check_index(m)?;
        }
        v.sort_unstable();
        v.dedup();
        Ok(ElementSet { members: v })
    }

    pub fn empty() -> Self {
        ElementSet {
            members: Vec::new(),
        }
    }

    /// From already validated indices.
    pub fn from_indices(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElementSet { members: v }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// Left translate `γA`.
    pub fn translate(&self, group: &FiniteGroup, gamma: usize) -> ElementSet {
        ElementSet::from_indices(self.members.iter().map(|&a| group.mul(gamma, a)))
    }

    pub fn render(&self, group: &FiniteGroup) -> Vec<String> {
        self.members.iter().map(|&a| group.render(a)).collect()
    }
}

/// All (even, when `alternating`) permutations of `{1..n}` fixing `point`,
/// as an element set of `S:n` / `A:n`.
pub fn point_stabilizer_subset(n: usize, alternating: bool, point: usize) -> Result<ElementSet> {
    if n < 1 {
        return Err(Error::invalid("degree must be at least 1"));
    }
    if point < 1 || point > n {
        return Err(Error::invalid(format!("point {point} outside 1..{n}")));
    }
    let spec = if alternating {
        GroupSpec::Alternating(n)
    } else {
        GroupSpec::Symmetric(n)
    };
    let group = build_group(&spec)?;
    let members = group
        .elements()
        .filter(|&a| {
            let p = group.permutation_of(a).expect("permutation backend");
            p.apply(point) == point
        })
        .collect::<Vec<_>>();
    Ok(ElementSet { members })
}

/// The largest prime `p` with `k | p-1` and `(p^k - 1) k <= n`, together
/// with the group order `m = (p^k - 1) k`, found by direct descending
/// search. `None` when no admissible prime exists.
pub fn find_os_parameters(n: u64, k: u32) -> Result<Option<(u64, u64)>> {
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    let mut best: Option<(u64, u64)> = None;
    let mut p = 2u64;
    loop {
        let order = match (p as u128).checked_pow(k) {
            Some(q) => (q - 1) * k as u128,
            None => break,
        };
        if order > n as u128 {
            break;
        }
        if field::is_prime(p) && (p - 1) % k as u64 == 0 {
            best = Some((p, order as u64));
        }
        p += 1;
    }
    Ok(best)
}
