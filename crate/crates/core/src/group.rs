//! Finite groups as explicit multiplication tables.
//!
//! Elements are indices `0..order`. Permutation groups compose left to right
//! (`x*y` applies `x` first), and cycle notation is 1-based, so the connection
//! sets of Cayley graphs can be written exactly as they appear in the
//! literature, e.g. `(1,3)(2,4)`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use crate::bits::VertexSet;

/// Largest group order accepted by [`FiniteGroup::build`].
pub const MAX_ORDER: usize = 64;

/// A subset of group elements.
pub type ElementSet = VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    OrderTooLarge { order: usize },
    InvalidSpec(String),
    UnknownElement(String),
    NotAGroup(String),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::OrderTooLarge { order } => {
                write!(f, "group order {order} exceeds the limit of {MAX_ORDER}")
            }
            GroupError::InvalidSpec(s) => write!(f, "invalid group spec {s:?}"),
            GroupError::UnknownElement(s) => write!(f, "no group element named {s:?}"),
            GroupError::NotAGroup(why) => write!(f, "table is not a group: {why}"),
        }
    }
}

impl core::error::Error for GroupError {}

/// Constructor recipe for the groups used in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// `Z_n`, additive.
    Cyclic(usize),
    /// `D_{2m}` of the given order `2m`, presented as `<a, b | a^m = b^2 = (ba)^2 = e>`.
    Dihedral(usize),
    /// `S_n` on points `1..=n`.
    Symmetric(usize),
    /// `A_n` on points `1..=n`.
    Alternating(usize),
    /// Direct product, elements written as tuples.
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    /// Parses names like `Z28`, `D16`, `S4`, `A4xZ2`, `Z4xZ4`, `Z2^4`.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::InvalidSpec(text.to_string());
        let factors: Vec<&str> = text.split(['x', 'X', '×']).map(str::trim).collect();
        let mut specs = Vec::new();
        for f in &factors {
            let (base, power) = match f.split_once('^') {
                Some((b, p)) => (b, p.trim().parse::<usize>().map_err(|_| bad())?),
                None => (*f, 1),
            };
            let mut chars = base.chars();
            let kind = chars.next().ok_or_else(bad)?;
            let num: usize = chars.as_str().parse().map_err(|_| bad())?;
            let spec = match kind {
                'Z' | 'C' => GroupSpec::Cyclic(num),
                'D' => GroupSpec::Dihedral(num),
                'S' => GroupSpec::Symmetric(num),
                'A' => GroupSpec::Alternating(num),
                _ => return Err(bad()),
            };
            for _ in 0..power {
                specs.push(spec.clone());
            }
        }
        Ok(if specs.len() == 1 { specs.pop().ok_or_else(bad)? } else { GroupSpec::Product(specs) })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Product(fs) => {
                for (i, s) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_char('x')?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
        }
    }
}

/// A permutation of `0..degree`, stored as images.
pub type Perm = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Cyclic(usize),
    Dihedral(usize),
    Permutation,
    Product(Vec<FiniteGroup>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    mul: Vec<u8>,
    inv: Vec<u8>,
    identity: usize,
    names: Vec<String>,
    perms: Option<Vec<Perm>>,
    kind: Kind,
}

impl FiniteGroup {
    pub fn build(spec: &GroupSpec) -> Result<Self, GroupError> {
        let g = match spec {
            GroupSpec::Cyclic(n) => cyclic(*n)?,
            GroupSpec::Dihedral(order) => dihedral(*order)?,
            GroupSpec::Symmetric(n) => symmetric(*n)?,
            GroupSpec::Alternating(n) => alternating(*n)?,
            GroupSpec::Product(fs) => {
                let factors = fs.iter().map(FiniteGroup::build).collect::<Result<Vec<_>, _>>()?;
                product(factors)?
            }
        };
        Ok(g.with_label(spec.to_string()))
    }

    /// Parses a spec string and builds the group.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        Self::build(&GroupSpec::parse(text)?)
    }

    /// The permutation group generated by `generators` acting on `0..degree`.
    pub fn from_permutations(degree: usize, generators: &[Perm]) -> Result<Self, GroupError> {
        if degree > u8::MAX as usize {
            return Err(GroupError::InvalidSpec(alloc::format!("degree {degree}")));
        }
        if let Some(bad) = generators.iter().find(|g| g.len() != degree || !is_perm(g)) {
            return Err(GroupError::NotAGroup(alloc::format!("{bad:?} is not a permutation of degree {degree}")));
        }
        let identity: Perm = (0..degree as u8).collect();
        let mut elements = alloc::vec![identity.clone()];
        let mut index: BTreeMap<Perm, usize> = BTreeMap::new();
        index.insert(identity, 0);
        let mut i = 0;
        while i < elements.len() {
            for gen in generators {
                let next = compose(&elements[i], gen);
                if !index.contains_key(&next) {
                    if elements.len() == MAX_ORDER {
                        return Err(GroupError::OrderTooLarge { order: MAX_ORDER + 1 });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            i += 1;
        }
        let order = elements.len();
        let mut mul = alloc::vec![0u8; order * order];
        for (x, px) in elements.iter().enumerate() {
            for (y, py) in elements.iter().enumerate() {
                mul[x * order + y] = index[&compose(px, py)] as u8;
            }
        }
        let names = elements.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_table(order, mul, names, Some(elements), Kind::Permutation)
    }

    fn from_table(
        order: usize,
        mul: Vec<u8>,
        names: Vec<String>,
        perms: Option<Vec<Perm>>,
        kind: Kind,
    ) -> Result<Self, GroupError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GroupError::OrderTooLarge { order });
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul[e * order + x] as usize == x && mul[x * order + e] as usize == x))
            .ok_or_else(|| GroupError::NotAGroup("no identity".into()))?;
        let inv = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| mul[x * order + y] as usize == identity)
                    .map(|y| y as u8)
                    .ok_or_else(|| GroupError::NotAGroup(alloc::format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let g = FiniteGroup { label: String::new(), order, mul, inv, identity, names, perms, kind };
        g.verify_axioms()?;
        Ok(g)
    }

    fn with_label(mut self, label: String) -> Self {
        self.label = label;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// The permutation representing `x`, when the group has one.
    pub fn permutation(&self, x: usize) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[x])
    }

    /// Exhaustive check of closure, associativity, identity and inverses.
    pub fn verify_axioms(&self) -> Result<(), GroupError> {
        let n = self.order;
        if self.mul.iter().any(|&z| z as usize >= n) {
            return Err(GroupError::NotAGroup("table not closed".into()));
        }
        for x in 0..n {
            if self.mul(x, self.identity) != x || self.mul(self.identity, x) != x {
                return Err(GroupError::NotAGroup("identity law".into()));
            }
            if self.mul(x, self.inv(x)) != self.identity || self.mul(self.inv(x), x) != self.identity {
                return Err(GroupError::NotAGroup("inverse law".into()));
            }
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(GroupError::NotAGroup(alloc::format!("({x}*{y})*{z} != {x}*({y}*{z})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The subgroup generated by `set`.
    pub fn generated(&self, set: ElementSet) -> ElementSet {
        let mut sub = ElementSet::singleton(self.identity);
        let mut frontier = sub;
        while !frontier.is_empty() {
            let mut next = ElementSet::EMPTY;
            for x in frontier.iter() {
                for s in set.iter() {
                    next.insert(self.mul(x, s));
                }
            }
            frontier = next.difference(sub);
            sub = sub.union(frontier);
        }
        sub
    }

    pub fn is_subgroup(&self, set: ElementSet) -> bool {
        set.contains(self.identity)
            && set.iter().all(|x| set.contains(self.inv(x)) && set.iter().all(|y| set.contains(self.mul(x, y))))
    }

    /// Right cosets `Hx`, ordered by smallest element.
    pub fn right_cosets(&self, subgroup: ElementSet) -> Vec<ElementSet> {
        let mut seen = ElementSet::EMPTY;
        let mut out = Vec::new();
        for x in 0..self.order {
            if seen.contains(x) {
                continue;
            }
            let coset: ElementSet = subgroup.iter().map(|h| self.mul(h, x)).collect();
            seen = seen.union(coset);
            out.push(coset);
        }
        out
    }

    /// Right translation `x -> x*h` as a permutation of element indices.
    pub fn right_translation(&self, h: usize) -> Vec<usize> {
        (0..self.order).map(|x| self.mul(x, h)).collect()
    }

    /// Looks an element up by name or notation.
    ///
    /// Accepted forms: the canonical name; integers mod `n` for `Z_n`; words in
    /// `a`, `b` such as `ba^3` or `a^-1` for dihedral groups; tuples `(x,y)` for
    /// products; 1-based cycle notation for groups with a permutation
    /// representation; and a leading `-` for the inverse of any of these.
    pub fn element(&self, text: &str) -> Result<usize, GroupError> {
        let t = text.trim();
        let unknown = || GroupError::UnknownElement(t.to_string());
        if let Some(i) = self.names.iter().position(|n| n == t) {
            return Ok(i);
        }
        let specific = match &self.kind {
            Kind::Cyclic(n) => t.parse::<i64>().ok().map(|v| v.rem_euclid(*n as i64) as usize),
            Kind::Dihedral(m) => parse_dihedral_word(t, *m).map(|(s, r)| dihedral_index(*m, s, r)),
            Kind::Product(factors) => self.parse_tuple(t, factors),
            Kind::Permutation => None,
        };
        if let Some(x) = specific {
            return Ok(x);
        }
        if let Some(perms) = &self.perms {
            if let Some(p) = parse_cycles(t, perms[0].len()) {
                if let Some(i) = perms.iter().position(|q| *q == p) {
                    return Ok(i);
                }
            }
        }
        if let Some(rest) = t.strip_prefix('-') {
            if !rest.starts_with('-') {
                return self.element(rest).map(|x| self.inv(x)).map_err(|_| unknown());
            }
        }
        Err(unknown())
    }

    fn parse_tuple(&self, t: &str, factors: &[FiniteGroup]) -> Option<usize> {
        let inner = t.strip_prefix('(')?.strip_suffix(')')?;
        let parts = split_top_level(inner);
        if parts.len() != factors.len() {
            return None;
        }
        let mut idx = 0;
        for (part, f) in parts.iter().zip(factors) {
            idx = idx * f.order() + f.element(part).ok()?;
        }
        Some(idx)
    }

    /// Parses a comma-separated list of elements (commas inside parentheses are kept).
    pub fn element_set(&self, text: &str) -> Result<ElementSet, GroupError> {
        split_top_level(text).into_iter().filter(|s| !s.trim().is_empty()).map(|s| self.element(s)).collect()
    }

    pub fn describe_set(&self, set: ElementSet) -> String {
        let mut out = String::from("{");
        for (i, x) in set.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(self.name(x));
        }
        out.push('}');
        out
    }
}

/// Splits on commas that are not nested inside parentheses.
pub fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out
}

fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > MAX_ORDER {
        return Err(GroupError::OrderTooLarge { order: n });
    }
    let mul = (0..n).flat_map(|x| (0..n).map(move |y| ((x + y) % n) as u8)).collect();
    let names = (0..n).map(|x| x.to_string()).collect();
    // regular action on n points: x sends point p to p + x
    let perms = (0..n).map(|x| (0..n).map(|p| ((p + x) % n) as u8).collect()).collect();
    FiniteGroup::from_table(n, mul, names, Some(perms), Kind::Cyclic(n))
}

/// Element `b^s a^r` sits at index `s*m + r`.
fn dihedral_index(m: usize, s: usize, r: usize) -> usize {
    s * m + r
}

fn dihedral(order: usize) -> Result<FiniteGroup, GroupError> {
    if order == 0 || !order.is_multiple_of(2) {
        return Err(GroupError::InvalidSpec(alloc::format!("D{order}")));
    }
    if order > MAX_ORDER {
        return Err(GroupError::OrderTooLarge { order });
    }
    let m = order / 2;
    // a^r b = b a^-r, so (b^s a^r)(b^t a^q) = b^(s+t) a^((-1)^t r + q)
    let mut mul = alloc::vec![0u8; order * order];
    for x in 0..order {
        let (s, r) = (x / m, x % m);
        for y in 0..order {
            let (t, q) = (y / m, y % m);
            let r2 = if t == 0 { r } else { (m - r) % m };
            mul[x * order + y] = dihedral_index(m, (s + t) % 2, (r2 + q) % m) as u8;
        }
    }
    let names = (0..order)
        .map(|x| {
            let (s, r) = (x / m, x % m);
            match (s, r) {
                (0, 0) => "e".to_string(),
                (0, 1) => "a".to_string(),
                (0, r) => alloc::format!("a^{r}"),
                (_, 0) => "b".to_string(),
                (_, 1) => "ba".to_string(),
                (_, r) => alloc::format!("ba^{r}"),
            }
        })
        .collect();
    FiniteGroup::from_table(order, mul, names, None, Kind::Dihedral(m))
}

/// Parses words like `e`, `a^-2`, `ba^3`, `ab` into `(s, r)` with the element `b^s a^r`.
fn parse_dihedral_word(t: &str, m: usize) -> Option<(usize, usize)> {
    if t == "e" || t == "1" {
        return Some((0, 0));
    }
    let m_i = m as i64;
    let (mut s, mut r) = (0usize, 0i64);
    let bytes = t.as_bytes();
    let mut i = 0;
    if bytes.is_empty() {
        return None;
    }
    while i < bytes.len() {
        let letter = bytes[i];
        i += 1;
        let start = i;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
        }
        let num_start = i;
        if i < bytes.len() && bytes[i] == b'-' {
            i += 1;
        }
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let exp = if i == num_start {
            if i != start {
                return None;
            }
            1
        } else {
            t[num_start..i].parse::<i64>().ok()?
        };
        match letter {
            // (b^s a^r) a^exp = b^s a^(r+exp)
            b'a' => r = (r + exp).rem_euclid(m_i),
            // (b^s a^r) b^exp: each b flips the sign of r
            b'b' => {
                if exp.rem_euclid(2) == 1 {
                    s ^= 1;
                    r = (-r).rem_euclid(m_i);
                }
            }
            _ => return None,
        }
    }
    Some((s, r as usize))
}

fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidSpec("S0".into()));
    }
    let order = (1..=n).product::<usize>();
    if order > MAX_ORDER {
        return Err(GroupError::OrderTooLarge { order });
    }
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Perm = (0..n as u8).collect();
        t.swap(0, 1);
        gens.push(t);
        gens.push((0..n).map(|i| ((i + 1) % n) as u8).collect());
    }
    FiniteGroup::from_permutations(n, &gens)
}

fn alternating(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidSpec("A0".into()));
    }
    let order = (1..=n).product::<usize>() / if n >= 2 { 2 } else { 1 };
    if order > MAX_ORDER {
        return Err(GroupError::OrderTooLarge { order });
    }
    // 3-cycles (1,2,i)
    let gens: Vec<Perm> = (2..n)
        .map(|i| {
            let mut p: Perm = (0..n as u8).collect();
            p[0] = 1;
            p[1] = i as u8;
            p[i] = 0;
            p
        })
        .collect();
    FiniteGroup::from_permutations(n, &gens)
}

fn product(factors: Vec<FiniteGroup>) -> Result<FiniteGroup, GroupError> {
    let order = factors.iter().map(FiniteGroup::order).product::<usize>();
    if order > MAX_ORDER {
        return Err(GroupError::OrderTooLarge { order });
    }
    // mixed radix, first factor most significant
    let digits = |mut x: usize| {
        let mut d = alloc::vec![0; factors.len()];
        for (i, f) in factors.iter().enumerate().rev() {
            d[i] = x % f.order();
            x /= f.order();
        }
        d
    };
    let join = |d: &[usize]| d.iter().zip(&factors).fold(0, |acc, (&x, f)| acc * f.order() + x);
    let mut mul = alloc::vec![0u8; order * order];
    for x in 0..order {
        let dx = digits(x);
        for y in 0..order {
            let dy = digits(y);
            let dz: Vec<usize> = factors.iter().enumerate().map(|(i, f)| f.mul(dx[i], dy[i])).collect();
            mul[x * order + y] = join(&dz) as u8;
        }
    }
    let names = (0..order)
        .map(|x| {
            let d = digits(x);
            let mut s = String::from("(");
            for (i, f) in factors.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(f.name(d[i]));
            }
            s.push(')');
            s
        })
        .collect();
    let perms = if factors.iter().all(|f| f.perms.is_some()) {
        let total: usize = factors.iter().map(|f| f.perms.as_ref().map_or(0, |p| p[0].len())).sum();
        if total > u8::MAX as usize {
            None
        } else {
            Some(
                (0..order)
                    .map(|x| {
                        let d = digits(x);
                        let mut p = Perm::with_capacity(total);
                        let mut shift = 0u8;
                        for (i, f) in factors.iter().enumerate() {
                            let fp = &f.perms.as_ref().expect("checked")[d[i]];
                            p.extend(fp.iter().map(|&v| v + shift));
                            shift += fp.len() as u8;
                        }
                        p
                    })
                    .collect(),
            )
        }
    } else {
        None
    };
    FiniteGroup::from_table(order, mul, names, perms, Kind::Product(factors))
}

fn is_perm(p: &[u8]) -> bool {
    let mut seen = VertexSet::EMPTY;
    p.iter().all(|&x| {
        let ok = (x as usize) < p.len() && !seen.contains(x as usize);
        seen.insert(x as usize);
        ok
    })
}

/// `x` then `y`.
fn compose(x: &[u8], y: &[u8]) -> Perm {
    x.iter().map(|&p| y[p as usize]).collect()
}

/// Canonical 1-based cycle notation; `()` for the identity.
pub fn cycle_notation(p: &[u8]) -> String {
    let mut out = String::new();
    let mut seen = VertexSet::EMPTY;
    for start in 0..p.len() {
        if seen.contains(start) || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen.contains(x) {
            seen.insert(x);
            if !first {
                out.push(',');
            }
            first = false;
            let _ = write!(out, "{}", x + 1);
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses 1-based cycle notation such as `(1,3)(2,4)`; cycles compose left to right.
pub fn parse_cycles(text: &str, degree: usize) -> Option<Perm> {
    let mut perm: Perm = (0..degree as u8).collect();
    let mut rest = text.trim();
    if rest.is_empty() {
        return None;
    }
    while !rest.is_empty() {
        let inner_end = rest.find(')')?;
        let inner = rest.strip_prefix('(')?.get(..inner_end - 1)?;
        rest = rest[inner_end + 1..].trim_start();
        if inner.trim().is_empty() {
            continue;
        }
        let points = inner
            .split(',')
            .map(|s| s.trim().parse::<usize>().ok().filter(|&p| p >= 1 && p <= degree).map(|p| p - 1))
            .collect::<Option<Vec<_>>>()?;
        let mut distinct = VertexSet::EMPTY;
        for &p in &points {
            if distinct.contains(p) {
                return None;
            }
            distinct.insert(p);
        }
        let mut cycle: Perm = (0..degree as u8).collect();
        for (i, &p) in points.iter().enumerate() {
            let next = points[(i + 1) % points.len()];
            cycle[p] = next as u8;
        }
        if !is_perm(&cycle) {
            return None;
        }
        perm = compose(&perm, &cycle);
    }
    Some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (spec, order) in
            [("Z28", 28), ("D16", 16), ("S4", 24), ("A4", 12), ("A4xZ2", 24), ("Z4xZ4", 16), ("Z2^4", 16), ("A5", 60)]
        {
            let g = FiniteGroup::parse(spec).unwrap();
            assert_eq!(g.order(), order, "{spec}");
            assert_eq!(g.label(), GroupSpec::parse(spec).unwrap().to_string());
        }
        assert_eq!(FiniteGroup::parse("S5"), Err(GroupError::OrderTooLarge { order: 120 }));
        assert_eq!(FiniteGroup::parse("Z65"), Err(GroupError::OrderTooLarge { order: 65 }));
        assert!(FiniteGroup::parse("Q8").is_err());
        assert!(FiniteGroup::parse("D7").is_err());
    }

    #[test]
    fn dihedral_presentation() {
        let d = FiniteGroup::parse("D16").unwrap();
        let a = d.element("a").unwrap();
        let b = d.element("b").unwrap();
        let e = d.identity();
        let pow = |x: usize, k: usize| (0..k).fold(e, |acc, _| d.mul(acc, x));
        assert_eq!(pow(a, 8), e);
        assert_ne!(pow(a, 4), e);
        assert_eq!(d.mul(b, b), e);
        let ba = d.mul(b, a);
        assert_eq!(d.mul(ba, ba), e);
        assert_eq!(d.element("ba^3").unwrap(), d.mul(b, pow(a, 3)));
        assert_eq!(d.element("a^-1").unwrap(), d.inv(a));
        assert_eq!(d.element("a^-2").unwrap(), pow(a, 6));
        assert_eq!(d.element("ab").unwrap(), d.mul(a, b));
        assert_eq!(d.name(d.element("ba6").unwrap()), "ba^6");
    }

    #[test]
    fn cyclic_integers_and_negatives() {
        let z = FiniteGroup::parse("Z28").unwrap();
        assert_eq!(z.element("-1").unwrap(), 27);
        assert_eq!(z.element("14").unwrap(), 14);
        assert_eq!(z.element("30").unwrap(), 2);
    }

    #[test]
    fn product_tuples() {
        let g = FiniteGroup::parse("Z2xZ14").unwrap();
        let x = g.element("(1,-2)").unwrap();
        assert_eq!(g.name(x), "(1,12)");
        assert_eq!(g.element("-(1,2)").unwrap(), x);
        // the 2-cycle (1,2) on the permutation side would be the element (1,0);
        // tuple syntax takes precedence
        assert_eq!(g.name(g.element("(1,2)").unwrap()), "(1,2)");
    }

    #[test]
    fn cycle_notation_roundtrip() {
        let s4 = FiniteGroup::parse("S4").unwrap();
        for x in 0..s4.order() {
            assert_eq!(s4.element(s4.name(x)).unwrap(), x);
        }
        assert_eq!(s4.name(s4.identity()), "()");
        let x = s4.element("(1,3)(2,4)").unwrap();
        assert_eq!(s4.mul(x, x), s4.identity());
        assert!(s4.element("(1,5)").is_err());
        assert!(s4.element("(1,1)").is_err());
    }

    #[test]
    fn a4_times_z2_cycle_notation() {
        let g = FiniteGroup::parse("A4xZ2").unwrap();
        let z = g.element("(5,6)").unwrap();
        assert_eq!(g.name(z), "((),1)");
        let x = g.element("(1,3)(2,4)(5,6)").unwrap();
        assert_eq!(g.name(x), "((1,3)(2,4),1)");
        // odd permutations of 1..4 are not in A4
        assert!(g.element("(1,2)").is_err());
    }

    #[test]
    fn subgroups_and_cosets() {
        let z = FiniteGroup::parse("Z28").unwrap();
        let h = z.generated(z.element_set("7").unwrap());
        assert_eq!(h.to_vec(), [0, 7, 14, 21]);
        assert!(z.is_subgroup(h));
        let cosets = z.right_cosets(h);
        assert_eq!(cosets.len(), 7);
        assert!(cosets.iter().all(|c| c.len() == 4));
        assert!(!z.is_subgroup(z.element_set("0,7").unwrap()));
    }

    #[test]
    fn split_respects_parentheses() {
        assert_eq!(split_top_level("(1,0), (0,1),2"), ["(1,0)", "(0,1)", "2"]);
    }

    #[test]
    fn permutation_group_closure() {
        // (1,2,3) generates Z3
        let g = FiniteGroup::from_permutations(3, &[alloc::vec![1, 2, 0]]).unwrap();
        assert_eq!(g.order(), 3);
        assert!(FiniteGroup::from_permutations(3, &[alloc::vec![0, 0, 1]]).is_err());
    }
}
