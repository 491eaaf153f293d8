//! Finite groups from permutation generators, and the built-in catalog.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub const ORDER_BOUND: usize = 10_000;

/// A finite group given by its Cayley table; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub order: usize,
    pub cayley: Vec<Vec<usize>>,
    pub element_names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Checks unit, inverses and associativity exhaustively.
    pub fn from_cayley(cayley: Vec<Vec<usize>>) -> Result<Self> {
        let n = cayley.len();
        let bad = |r: &str| Err(Error::InvalidOrders(r.to_string()));
        if n == 0 || cayley.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return bad("Cayley table is not square over 0..n");
        }
        if (0..n).any(|a| cayley[0][a] != a || cayley[a][0] != a) {
            return bad("element 0 is not the identity");
        }
        if (0..n).any(|a| !(0..n).any(|b| cayley[a][b] == 0)) {
            return bad("missing inverse");
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return bad("table is not associative");
                    }
                }
            }
        }
        Ok(FiniteGroup { order: n, cayley, element_names: None })
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.cayley[a][b] == 0).expect("group has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Conjugacy classes: identity first, then by size and least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let inv: Vec<usize> = (0..n).map(|a| self.inv(a)).collect();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut cls: Vec<usize> = (0..n).map(|g| self.mul(self.mul(g, a), inv[g])).collect();
            cls.sort_unstable();
            cls.dedup();
            for &c in &cls {
                seen[c] = true;
            }
            classes.push(cls);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        classes
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    pub fn centralizer_order(&self, a: usize) -> usize {
        (0..self.order).filter(|&b| self.mul(a, b) == self.mul(b, a)).count()
    }

    /// Upper central series reaches the whole group.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.order;
        let mut z = vec![false; n];
        z[0] = true;
        loop {
            // g is in the next term when every commutator [g, x] lies in the current one
            let next: Vec<bool> = (0..n)
                .map(|g| {
                    (0..n).all(|x| {
                        let c = self.mul(self.mul(g, x), self.inv(self.mul(x, g)));
                        z[c]
                    })
                })
                .collect();
            if next.iter().all(|&b| b) {
                return true;
            }
            if next == z {
                return false;
            }
            z = next;
        }
    }
}

/// Composition `(p ∘ q)(x) = p(q(x))`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

/// Breadth-first closure of the generated permutation group.
pub fn group_from_generators(perms: &[Vec<usize>]) -> Result<FiniteGroup> {
    let degree = perms.iter().map(Vec::len).max().unwrap_or(1).max(1);
    let gens: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut q: Vec<usize> = (0..degree).collect();
            q[..p.len()].copy_from_slice(p);
            q
        })
        .collect();
    for g in &gens {
        let mut s = g.clone();
        s.sort_unstable();
        if s != (0..degree).collect::<Vec<_>>() {
            return Err(Error::InvalidOrders("generator is not a permutation".into()));
        }
    }
    let id: Vec<usize> = (0..degree).collect();
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for g in &gens {
            let p = compose(&elems[a], g);
            if !index.contains_key(&p) {
                if elems.len() >= ORDER_BOUND {
                    return Err(Error::OrderBoundExceeded { bound: ORDER_BOUND });
                }
                index.insert(p.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(p);
            }
        }
    }
    let n = elems.len();
    let cayley = (0..n).map(|a| (0..n).map(|b| index[&compose(&elems[a], &elems[b])]).collect()).collect();
    Ok(FiniteGroup { order: n, cayley, element_names: None })
}

/// Parses generators in cycle notation, e.g. `"(012),(01)"` or `"(0 1 2)(3 4); (0 1)"`.
///
/// Generators are separated by `,` or `;` outside parentheses. Inside a cycle,
/// points are separated by whitespace or commas; a cycle without separators is
/// read one digit per point.
pub fn parse_generators(text: &str) -> Result<Vec<Vec<usize>>> {
    let err = |col: usize, reason: &str| Error::Parse { line: 1, col, reason: reason.to_string() };
    let mut gens: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        match c {
            '(' => {
                let mut body = String::new();
                loop {
                    match chars.next() {
                        Some((_, ')')) => break,
                        Some((_, ch)) => body.push(ch),
                        None => return Err(err(pos + 1, "unclosed cycle")),
                    }
                }
                let tokens: Vec<&str> = if body.contains(|ch: char| ch.is_whitespace() || ch == ',') {
                    body.split(|ch: char| ch.is_whitespace() || ch == ',').filter(|t| !t.is_empty()).collect()
                } else {
                    body.char_indices().map(|(i, _)| &body[i..i + 1]).collect()
                };
                let mut cycle = Vec::new();
                for t in tokens {
                    cycle.push(t.parse::<usize>().map_err(|_| err(pos + 1, "cycle entry is not a point"))?);
                }
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != cycle.len() {
                    return Err(err(pos + 1, "repeated point in cycle"));
                }
                gens.last_mut().unwrap().push(cycle);
            }
            ',' | ';' => gens.push(Vec::new()),
            c if c.is_whitespace() => {}
            _ => return Err(err(pos + 1, "unexpected character")),
        }
    }
    let gens: Vec<Vec<Vec<usize>>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    if gens.is_empty() {
        return Err(err(1, "no generators"));
    }
    let degree = gens.iter().flatten().flatten().max().map_or(1, |&m| m + 1);
    let mut perms = Vec::new();
    for cycles in gens {
        let mut p: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cyc in cycles {
            for (a, &x) in cyc.iter().enumerate() {
                if touched[x] {
                    return Err(err(1, "cycles of one generator overlap"));
                }
                touched[x] = true;
                p[x] = cyc[(a + 1) % cyc.len()];
            }
        }
        perms.push(p);
    }
    Ok(perms)
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup { order: n, cayley, element_names: None }
}

/// Direct product of cyclic groups, elements in mixed-radix order.
pub fn abelian(orders: &[usize]) -> FiniteGroup {
    let n: usize = orders.iter().product();
    let digits = |mut x: usize| {
        orders
            .iter()
            .map(|&o| {
                let d = x % o;
                x /= o;
                d
            })
            .collect::<Vec<_>>()
    };
    let encode = |ds: &[usize]| ds.iter().zip(orders).rev().fold(0, |acc, (&d, &o)| acc * o + d);
    let cayley = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let s: Vec<usize> =
                        digits(a).iter().zip(digits(b)).zip(orders).map(|((x, y), o)| (x + y) % o).collect();
                    encode(&s)
                })
                .collect()
        })
        .collect();
    FiniteGroup { order: n, cayley, element_names: None }
}

/// Catalog entries as `(name, generators in cycle notation)`.
pub const CATALOG: &[(&str, &str)] = &[
    ("C2", "(0 1)"),
    ("C3", "(0 1 2)"),
    ("C4", "(0 1 2 3)"),
    ("C5", "(0 1 2 3 4)"),
    ("C6", "(0 1 2 3 4 5)"),
    ("C7", "(0 1 2 3 4 5 6)"),
    ("C8", "(0 1 2 3 4 5 6 7)"),
    ("Z2^2", "(0 1), (2 3)"),
    ("Z2^3", "(0 1), (2 3), (4 5)"),
    ("S3", "(0 1 2), (0 1)"),
    ("D4", "(0 1 2 3), (0 2)"),
    ("D5", "(0 1 2 3 4), (1 4)(2 3)"),
    ("Q8", "(0 1 4 5)(2 3 6 7), (0 2 4 6)(1 7 5 3)"),
    ("A4", "(0 1 2), (0 1)(2 3)"),
    ("SL(2,3)", "(0 3 6)(1 7 4), (0 5 1 2)(3 6 7 4)"),
    ("S4", "(0 1 2 3), (0 1)"),
    ("A5", "(0 1 2 3 4), (0 1 2)"),
    ("D6", "(0 1 2 3 4 5), (1 5)(2 4)"),
    ("Z3^2", "(0 1 2), (3 4 5)"),
    ("C2xC4", "(0 1 2 3), (4 5)"),
    ("S5", "(0 1 2 3 4), (0 1)"),
];

/// `"2x2x3"` as `Z2 × Z2 × Z3`.
pub fn abelian_from_spec(spec: &str) -> Result<FiniteGroup> {
    let orders = spec
        .split(['x', 'X', '*'])
        .map(|t| t.trim().parse::<usize>().ok().filter(|&n| n > 0))
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| Error::InvalidOrders(format!("cannot read `{spec}` as cyclic orders")))?;
    Ok(abelian(&orders))
}

pub fn catalog_group(name: &str) -> Option<FiniteGroup> {
    CATALOG
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, g)| group_from_generators(&parse_generators(g).expect("catalog parses")).expect("catalog closes"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let want = [2, 3, 4, 5, 6, 7, 8, 4, 8, 6, 8, 10, 8, 12, 24, 24, 60, 12, 9, 8, 120];
        for ((name, _), &n) in CATALOG.iter().zip(&want) {
            let g = catalog_group(name).unwrap();
            assert_eq!(g.order, n, "{name}");
            FiniteGroup::from_cayley(g.cayley.clone()).unwrap();
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_generators("(012),(01)").unwrap(), vec![vec![1, 2, 0], vec![1, 0, 2]]);
        assert_eq!(group_from_generators(&parse_generators("(01)").unwrap()).unwrap().order, 2);
        assert!(matches!(parse_generators("(01"), Err(Error::Parse { .. })));
        assert!(matches!(parse_generators("(0 0)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn group_facts() {
        let q8 = catalog_group("Q8").unwrap();
        assert_eq!(q8.center().len(), 2);
        assert_eq!(q8.conjugacy_classes().iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1, 2, 2, 2]);
        assert!(q8.is_nilpotent());
        assert!(!catalog_group("S3").unwrap().is_nilpotent());
        assert!(!catalog_group("SL(2,3)").unwrap().is_nilpotent());
        assert_eq!(catalog_group("SL(2,3)").unwrap().center().len(), 2);
        assert_eq!(abelian(&[2, 2]).order, 4);
        assert!(abelian(&[2, 3]).is_abelian());
    }
}
