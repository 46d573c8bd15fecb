//! Finite posets carrying an injective labeled flag into the augmented
//! alphabet. Partitions assign integers to elements, weakly decreasing up
//! covers, strictly when the flag increases, bounded above by the flag value.

use crate::composition::{descent_composition, Composition};
use crate::letter::{InjectiveWord, Letter};
use crate::poly::Polynomial;
use crate::{Error, NVector, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A finite poset given by elements with string ids, irredundant cover
/// relations `(lower, upper)`, and an injective flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlaggedPoset {
    names: Vec<String>,
    flags: Vec<Letter>,
    covers: Vec<(usize, usize)>,
    // Full reachability: le[u * n + v] iff u <= v.
    le: Vec<bool>,
}

/// An assignment element -> integer, indexed like the poset's elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionMap {
    values: Vec<i32>,
}

impl PartitionMap {
    pub fn values(&self) -> &[i32] {
        &self.values
    }
}

impl FlaggedPoset {
    /// Builds and validates a poset. Covers are transitively reduced;
    /// duplicate covers, self-covers, cycles, repeated element names, and
    /// non-injective flags are rejected.
    pub fn new(elements: Vec<(String, Letter)>, covers: Vec<(String, String)>) -> Result<FlaggedPoset> {
        let mut names = Vec::with_capacity(elements.len());
        let mut flags = Vec::with_capacity(elements.len());
        let mut index = BTreeMap::new();
        for (name, flag) in elements {
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(Error::Poset(format!("duplicate element {name:?}")));
            }
            names.push(name);
            flags.push(flag);
        }
        let mut seen_flags = std::collections::BTreeSet::new();
        for (i, &flag) in flags.iter().enumerate() {
            if !seen_flags.insert(flag) {
                return Err(Error::Poset(format!(
                    "flag {flag} assigned to more than one element (second: {})",
                    names[i]
                )));
            }
        }
        let mut edge_list = Vec::with_capacity(covers.len());
        let mut seen_edges = std::collections::BTreeSet::new();
        for (lo, hi) in covers {
            let &u = index
                .get(&lo)
                .ok_or_else(|| Error::Poset(format!("unknown element {lo:?} in cover")))?;
            let &v = index
                .get(&hi)
                .ok_or_else(|| Error::Poset(format!("unknown element {hi:?} in cover")))?;
            if u == v {
                return Err(Error::Poset(format!("self-cover on {lo:?}")));
            }
            if !seen_edges.insert((u, v)) {
                return Err(Error::Poset(format!("duplicate cover {lo:?} -> {hi:?}")));
            }
            edge_list.push((u, v));
        }
        Self::from_indexed(names, flags, edge_list)
    }

    fn from_indexed(
        names: Vec<String>,
        flags: Vec<Letter>,
        edges: Vec<(usize, usize)>,
    ) -> Result<FlaggedPoset> {
        let n = names.len();
        // Reachability by depth-first search; an edge back into the start
        // element is a cycle.
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        let mut reach: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &edges {
            reach[u].push(v);
        }
        for start in 0..n {
            let mut stack = vec![start];
            let mut visited = vec![false; n];
            while let Some(u) = stack.pop() {
                for &v in &reach[u] {
                    if v == start {
                        return Err(Error::Poset(format!(
                            "cycle through element {:?}",
                            names[start]
                        )));
                    }
                    if !visited[v] {
                        visited[v] = true;
                        le[start * n + v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        // Transitive reduction: drop covers implied by a two-step path.
        let mut covers: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(u, v)| {
                !(0..n).any(|w| w != u && w != v && le[u * n + w] && le[w * n + v])
            })
            .collect();
        covers.sort_unstable();
        Ok(FlaggedPoset { names, flags, covers, le })
    }

    /// Builds the flag from a bijective labeling `omega` and a restriction
    /// `rho` satisfying the order condition: `rho(u) > rho(v)` must imply
    /// `omega(u) > omega(v)` over all element pairs.
    pub fn from_omega_rho(
        elements: Vec<String>,
        covers: Vec<(String, String)>,
        omega: &[u32],
        rho: &[i32],
    ) -> Result<FlaggedPoset> {
        let n = elements.len();
        if omega.len() != n || rho.len() != n {
            return Err(Error::Poset("omega/rho length mismatch".into()));
        }
        let mut sorted: Vec<u32> = omega.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=n as u32).collect::<Vec<u32>>() {
            return Err(Error::Poset("omega is not a bijection onto 1..n".into()));
        }
        if !lf_flag_holds(omega, rho) {
            return Err(Error::Poset(
                "rho(u) > rho(v) with omega(u) < omega(v): not a labeled flag".into(),
            ));
        }
        let flagged = elements
            .into_iter()
            .zip(omega.iter().zip(rho))
            .map(|(name, (&w, &r))| (name, Letter::new(r, w)))
            .collect();
        FlaggedPoset::new(flagged, covers)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn flag(&self, u: usize) -> Letter {
        self.flags[u]
    }

    pub fn le(&self, u: usize, v: usize) -> bool {
        self.le[u * self.len() + v]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// A cover forces strict inequality when the flag increases upward.
    pub fn strict_cover(&self, u: usize, v: usize) -> bool {
        self.flags[u] > self.flags[v]
    }

    /// The labeling and restriction recovered from the flag: `omega` ranks
    /// elements by their letters, `rho` takes values.
    pub fn omega_rho(&self) -> (Vec<u32>, Vec<i32>) {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&u| self.flags[u]);
        let mut omega = vec![0u32; self.len()];
        for (rank, &u) in order.iter().enumerate() {
            omega[u] = rank as u32 + 1;
        }
        let rho = self.flags.iter().map(|l| l.value()).collect();
        (omega, rho)
    }

    /// All linear extensions, each listed bottom to top, in lexicographic
    /// order of element indices.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut indegree = vec![0usize; n];
        for &(_, v) in &self.covers {
            indegree[v] += 1;
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend_rec(&mut indegree, &mut used, &mut current, &mut out);
        out
    }

    fn extend_rec(
        &self,
        indegree: &mut Vec<usize>,
        used: &mut Vec<bool>,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == self.len() {
            out.push(current.clone());
            return;
        }
        for u in 0..self.len() {
            if used[u] || indegree[u] > 0 {
                continue;
            }
            used[u] = true;
            current.push(u);
            for &(a, b) in &self.covers {
                if a == u {
                    indegree[b] -= 1;
                }
            }
            self.extend_rec(indegree, used, current, out);
            for &(a, b) in &self.covers {
                if a == u {
                    indegree[b] += 1;
                }
            }
            current.pop();
            used[u] = false;
        }
    }

    /// The injective word reading the flag along an extension.
    pub fn extension_word(&self, extension: &[usize]) -> InjectiveWord {
        InjectiveWord::new(extension.iter().map(|&u| self.flags[u]).collect())
            .expect("flag injective")
    }

    fn check_polynomial_mode(&self) -> Result<()> {
        for &flag in &self.flags {
            if flag.value() < 1 {
                return Err(Error::FlagValue(flag.value()));
            }
        }
        Ok(())
    }

    /// Partitions compatible with a total order on the elements (keeping the
    /// original flags): consecutive constraints only.
    fn chain_partitions(&self, chain: &[usize]) -> Vec<PartitionMap> {
        let mut out = Vec::new();
        let mut values = vec![0i32; self.len()];
        self.chain_rec(chain, 0, &mut values, &mut out);
        out
    }

    fn chain_rec(
        &self,
        chain: &[usize],
        pos: usize,
        values: &mut Vec<i32>,
        out: &mut Vec<PartitionMap>,
    ) {
        if pos == chain.len() {
            out.push(PartitionMap { values: values.clone() });
            return;
        }
        let u = chain[pos];
        let mut hi = self.flags[u].value();
        if pos > 0 {
            let prev = chain[pos - 1];
            let strict = self.flags[prev] > self.flags[u];
            hi = hi.min(values[prev] - if strict { 1 } else { 0 });
        }
        let mut f = hi;
        while f >= 1 {
            values[u] = f;
            self.chain_rec(chain, pos + 1, values, out);
            f -= 1;
        }
    }

    /// All partitions: maps into the positive integers, weakly decreasing up
    /// covers (strictly where the flag increases), bounded by flag values.
    /// Enumeration follows a fixed topological order with values descending.
    pub fn enumerate_partitions(&self) -> Result<Vec<PartitionMap>> {
        self.check_polynomial_mode()?;
        let order = self.topological_order();
        let mut out = Vec::new();
        let mut values = vec![0i32; self.len()];
        self.partitions_rec(&order, 0, &mut values, &mut out);
        Ok(out)
    }

    fn topological_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut indegree = vec![0usize; n];
        for &(_, v) in &self.covers {
            indegree[v] += 1;
        }
        let mut used = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let u = (0..n)
                .find(|&u| !used[u] && indegree[u] == 0)
                .expect("acyclic");
            used[u] = true;
            order.push(u);
            for &(a, b) in &self.covers {
                if a == u {
                    indegree[b] -= 1;
                }
            }
        }
        order
    }

    fn partitions_rec(
        &self,
        order: &[usize],
        pos: usize,
        values: &mut Vec<i32>,
        out: &mut Vec<PartitionMap>,
    ) {
        if pos == order.len() {
            out.push(PartitionMap { values: values.clone() });
            return;
        }
        let u = order[pos];
        let mut hi = self.flags[u].value();
        for &(a, b) in &self.covers {
            if b == u {
                // a was assigned earlier in topological order.
                hi = hi.min(values[a] - if self.strict_cover(a, b) { 1 } else { 0 });
            }
        }
        let mut f = hi;
        while f >= 1 {
            values[u] = f;
            self.partitions_rec(order, pos + 1, values, out);
            f -= 1;
        }
    }

    /// The generating polynomial: one monomial `prod x_{f(u)}` per partition.
    pub fn k_polynomial(&self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for p in self.enumerate_partitions()? {
            out.add_term(&partition_exponents(&p), 1);
        }
        Ok(out)
    }

    /// Splits the partition set by linear extension: each partition lands in
    /// the block of the unique extension it is compatible with.
    pub fn stanley_decomposition(&self) -> Result<Vec<(Vec<usize>, Vec<PartitionMap>)>> {
        self.check_polynomial_mode()?;
        Ok(self
            .linear_extensions()
            .into_iter()
            .map(|ext| {
                let parts = self.chain_partitions(&ext);
                (ext, parts)
            })
            .collect())
    }

    /// True when every pair of elements is comparable.
    pub fn is_chain(&self) -> bool {
        let n = self.len();
        (0..n).all(|u| (0..n).all(|v| self.le(u, v) || self.le(v, u)))
    }

    /// The unique bottom-to-top order of a chain poset.
    pub fn chain_order(&self) -> Result<Vec<usize>> {
        if !self.is_chain() {
            return Err(Error::NotAChain);
        }
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&u| (0..self.len()).filter(|&v| self.le(v, u)).count());
        Ok(order)
    }

    /// Descent composition of a labeling read along this chain.
    pub fn descent_composition(&self, omega: &[u32]) -> Result<Composition> {
        let order = self.chain_order()?;
        let labels: Vec<u32> = order.iter().map(|&u| omega[u]).collect();
        Ok(descent_composition(&labels))
    }
}

fn partition_exponents(p: &PartitionMap) -> NVector {
    let mut c = NVector::zero();
    for &v in p.values() {
        c.add_at(v, 1);
    }
    c
}

/// Checks the cover conditions of a well-behaved restriction: values weakly
/// decrease up covers, and a strict drop forces the labeling to drop too.
pub fn ab_flag_holds(covers: &[(usize, usize)], omega: &[u32], rho: &[i32]) -> bool {
    covers
        .iter()
        .all(|&(u, v)| rho[u] >= rho[v] && (rho[u] <= rho[v] || omega[u] > omega[v]))
}

/// Checks the global condition: `rho(u) > rho(v)` implies `omega(u) > omega(v)`
/// over all pairs, comparable or not.
pub fn lf_flag_holds(omega: &[u32], rho: &[i32]) -> bool {
    let n = omega.len();
    (0..n).all(|u| (0..n).all(|v| rho[u] <= rho[v] || omega[u] > omega[v]))
}

impl fmt::Display for FlaggedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, flag) in self.names.iter().zip(&self.flags) {
            writeln!(f, "elem {name} {flag}")?;
        }
        for &(u, v) in &self.covers {
            let kind = if self.strict_cover(u, v) { "strict" } else { "weak" };
            writeln!(f, "cover {} {} {kind}", self.names[u], self.names[v])?;
        }
        Ok(())
    }
}

/// Parses the poset file format: `elem <id> <letter>` and
/// `cover <lower> <upper> [weak|strict]` lines, `#` comments. An explicit
/// strictness annotation is validated against the flag, never stored.
pub fn parse_poset(input: &str) -> Result<FlaggedPoset> {
    let mut elements = Vec::new();
    let mut covers = Vec::new();
    let mut annotations = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().unwrap();
        let rest: Vec<&str> = tokens.collect();
        match keyword {
            "elem" => {
                if rest.len() != 2 {
                    return Err(Error::Parse(format!(
                        "line {}: expected `elem <id> <letter>`",
                        lineno + 1
                    )));
                }
                elements.push((rest[0].to_string(), rest[1].parse::<Letter>()?));
            }
            "cover" => {
                if rest.len() < 2 || rest.len() > 3 {
                    return Err(Error::Parse(format!(
                        "line {}: expected `cover <lower> <upper> [weak|strict]`",
                        lineno + 1
                    )));
                }
                if rest.len() == 3 {
                    match rest[2] {
                        "weak" | "strict" => annotations.push((
                            rest[0].to_string(),
                            rest[1].to_string(),
                            rest[2] == "strict",
                        )),
                        other => {
                            return Err(Error::Parse(format!(
                                "line {}: unknown annotation {other:?}",
                                lineno + 1
                            )))
                        }
                    }
                }
                covers.push((rest[0].to_string(), rest[1].to_string()));
            }
            other => {
                return Err(Error::Parse(format!(
                    "line {}: unknown keyword {other:?}",
                    lineno + 1
                )))
            }
        }
    }
    let poset = FlaggedPoset::new(elements, covers)?;
    for (lo, hi, strict) in annotations {
        let u = poset.names.iter().position(|n| *n == lo).unwrap();
        let v = poset.names.iter().position(|n| *n == hi).unwrap();
        if poset.strict_cover(u, v) != strict {
            return Err(Error::Poset(format!(
                "cover {lo} {hi} annotated {} but the flag makes it {}",
                if strict { "strict" } else { "weak" },
                if poset.strict_cover(u, v) { "strict" } else { "weak" },
            )));
        }
    }
    Ok(poset)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(v: i32, t: u32) -> Letter {
        Letter::new(v, t)
    }

    fn poset(elems: &[(&str, Letter)], covers: &[(&str, &str)]) -> FlaggedPoset {
        FlaggedPoset::new(
            elems.iter().map(|(n, f)| (n.to_string(), *f)).collect(),
            covers
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn linear_extension_counts() {
        let p = poset(
            &[("a", l(5, 1)), ("b", l(5, 2)), ("c", l(5, 3))],
            &[("b", "a"), ("b", "c")],
        );
        assert_eq!(p.linear_extensions().len(), 2);

        let chain = poset(
            &[("a", l(3, 1)), ("b", l(3, 2)), ("c", l(3, 3))],
            &[("a", "b"), ("b", "c")],
        );
        assert_eq!(chain.linear_extensions().len(), 1);
        assert!(chain.is_chain());

        let antichain = poset(&[("a", l(5, 1)), ("b", l(5, 2)), ("c", l(5, 3))], &[]);
        assert_eq!(antichain.linear_extensions().len(), 6);
    }

    #[test]
    fn single_element_partitions() {
        let p = poset(&[("a", l(3, 1))], &[]);
        let parts = p.enumerate_partitions().unwrap();
        assert_eq!(parts.len(), 3);
        let values: Vec<i32> = parts.iter().map(|m| m.values()[0]).collect();
        assert_eq!(values, vec![3, 2, 1]);
    }

    #[test]
    fn chain_word_partitions() {
        // Chain encoding the word l(3,1) l(3,2) l(1,1).
        let p = poset(
            &[("v1", l(3, 1)), ("v2", l(3, 2)), ("v3", l(1, 1))],
            &[("v1", "v2"), ("v2", "v3")],
        );
        let parts = p.enumerate_partitions().unwrap();
        let tuples: Vec<(i32, i32, i32)> = parts
            .iter()
            .map(|m| (m.values()[0], m.values()[1], m.values()[2]))
            .collect();
        assert_eq!(tuples, vec![(3, 3, 1), (3, 2, 1), (2, 2, 1)]);

        let k = p.k_polynomial().unwrap();
        let expected: Polynomial = "x(3)^2*x(1) + x(3)*x(2)*x(1) + x(2)^2*x(1)".parse().unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn zero_k_polynomial() {
        let p = poset(&[("v1", l(1, 2)), ("v2", l(1, 1))], &[("v1", "v2")]);
        assert!(p.k_polynomial().unwrap().is_zero());
        assert!(poset(&[], &[]).k_polynomial().unwrap() == Polynomial::one());
    }

    #[test]
    fn stanley_blocks() {
        // a weak below b, c strict below b; all values 4.
        let p = poset(
            &[("a", l(4, 1)), ("b", l(4, 2)), ("c", l(4, 3))],
            &[("a", "b"), ("c", "b")],
        );
        let blocks = p.stanley_decomposition().unwrap();
        assert_eq!(blocks.len(), 2);
        let all = p.enumerate_partitions().unwrap();
        let mut from_blocks: Vec<PartitionMap> =
            blocks.iter().flat_map(|(_, ps)| ps.clone()).collect();
        let mut expected = all.clone();
        from_blocks.sort();
        expected.sort();
        assert_eq!(from_blocks, expected);
        // Blocks: f(a) >= f(c) > f(b), respectively f(c) > f(a) >= f(b),
        // with element indices a = 0, b = 1, c = 2.
        for (ext, parts) in &blocks {
            for m in parts {
                let (fa, fb, fc) = (m.values()[0], m.values()[1], m.values()[2]);
                assert!(fa >= fb && fc > fb);
                if ext == &vec![0, 2, 1] {
                    assert!(fa >= fc && fc > fb);
                } else {
                    assert_eq!(ext, &vec![2, 0, 1]);
                    assert!(fc > fa && fa >= fb);
                }
            }
        }
    }

    #[test]
    fn omega_rho_conversions() {
        // 2-chain u below v, omega(u) = 2, omega(v) = 1, rho constant 2.
        let p = FlaggedPoset::from_omega_rho(
            vec!["u".into(), "v".into()],
            vec![("u".into(), "v".into())],
            &[2, 1],
            &[2, 2],
        )
        .unwrap();
        assert_eq!(p.flag(0), l(2, 2));
        assert_eq!(p.flag(1), l(2, 1));
        let parts = p.enumerate_partitions().unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].values(), &[2, 1]);

        let (omega, rho) = p.omega_rho();
        assert_eq!(omega, vec![2, 1]);
        assert_eq!(rho, vec![2, 2]);
        assert!(lf_flag_holds(&omega, &rho));

        // Round trip preserves the partition set.
        let q = FlaggedPoset::from_omega_rho(
            vec!["u".into(), "v".into()],
            vec![("u".into(), "v".into())],
            &omega,
            &rho,
        )
        .unwrap();
        assert_eq!(
            q.enumerate_partitions().unwrap(),
            p.enumerate_partitions().unwrap()
        );

        // Violating the order condition is rejected.
        assert!(FlaggedPoset::from_omega_rho(
            vec!["u".into(), "v".into()],
            vec![],
            &[1, 2],
            &[2, 1],
        )
        .is_err());
    }

    #[test]
    fn flag_conditions() {
        // Constant restriction: always fine.
        assert!(ab_flag_holds(&[(0, 1)], &[2, 1], &[3, 3]));
        assert!(ab_flag_holds(&[(0, 1)], &[1, 2], &[3, 3]));
        // Incomparable pair with increasing rho against decreasing omega.
        assert!(!lf_flag_holds(&[2, 1], &[1, 2]));
        // rho increases up the cover b -> a.
        let covers = [(1, 0), (1, 2)];
        assert!(!ab_flag_holds(&covers, &[2, 1, 3], &[3, 2, 2]));
    }

    #[test]
    fn descent_compositions() {
        let chain = poset(
            &[("b", l(9, 1)), ("c", l(9, 2)), ("a", l(9, 3))],
            &[("b", "c"), ("c", "a")],
        );
        assert_eq!(
            chain.descent_composition(&[1, 3, 2]).unwrap(),
            Composition::new(vec![2, 1]).unwrap()
        );
        assert_eq!(
            chain.descent_composition(&[1, 2, 3]).unwrap(),
            Composition::new(vec![3]).unwrap()
        );
        assert_eq!(
            chain.descent_composition(&[3, 2, 1]).unwrap(),
            Composition::new(vec![1, 1, 1]).unwrap()
        );
        let anti = poset(&[("a", l(1, 1)), ("b", l(1, 2))], &[]);
        assert_eq!(anti.descent_composition(&[1, 2]), Err(Error::NotAChain));
    }

    #[test]
    fn validation_errors() {
        assert!(FlaggedPoset::new(
            vec![("a".into(), l(1, 1)), ("a".into(), l(1, 2))],
            vec![],
        )
        .is_err());
        assert!(FlaggedPoset::new(
            vec![("a".into(), l(1, 1)), ("b".into(), l(1, 1))],
            vec![],
        )
        .is_err());
        assert!(FlaggedPoset::new(
            vec![("a".into(), l(1, 1)), ("b".into(), l(1, 2))],
            vec![("a".into(), "b".into()), ("b".into(), "a".into())],
        )
        .is_err());
        let redundant = FlaggedPoset::new(
            vec![
                ("a".into(), l(1, 1)),
                ("b".into(), l(1, 2)),
                ("c".into(), l(1, 3)),
            ],
            vec![
                ("a".into(), "b".into()),
                ("b".into(), "c".into()),
                ("a".into(), "c".into()),
            ],
        )
        .unwrap();
        assert_eq!(redundant.covers().len(), 2);
    }

    /// Direct enumeration of restricted labeled-poset partitions, used as an
    /// oracle against the flag encoding.
    fn brute_force_partitions(
        n: usize,
        covers: &[(usize, usize)],
        omega: &[u32],
        rho: &[i32],
    ) -> std::collections::BTreeSet<Vec<i32>> {
        let max = rho.iter().copied().max().unwrap_or(0);
        let mut out = std::collections::BTreeSet::new();
        let mut values = vec![1i32; n];
        loop {
            let ok = values.iter().zip(rho).all(|(f, r)| f <= r)
                && covers.iter().all(|&(u, v)| {
                    values[u] >= values[v] && (omega[u] < omega[v] || values[u] > values[v])
                });
            if ok {
                out.insert(values.clone());
            }
            // Odometer over {1..max}^n.
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                values[i] += 1;
                if values[i] <= max {
                    break;
                }
                values[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn ab_flag_encoding_matches_brute_force() {
        // An AB-flag that is not order-compatible globally: the incomparable
        // element c breaks the all-pairs condition but not the cover ones.
        let covers = [(0usize, 1usize)];
        let omega = [3u32, 1, 2];
        let rho = [3i32, 2, 5];
        assert!(ab_flag_holds(&covers, &omega, &rho));
        assert!(!lf_flag_holds(&omega, &rho));

        let p = FlaggedPoset::new(
            (0..3)
                .map(|i| (format!("e{i}"), l(rho[i], omega[i])))
                .collect(),
            vec![("e0".into(), "e1".into())],
        )
        .unwrap();
        let got: std::collections::BTreeSet<Vec<i32>> = p
            .enumerate_partitions()
            .unwrap()
            .into_iter()
            .map(|m| m.values().to_vec())
            .collect();
        assert_eq!(got, brute_force_partitions(3, &covers, &omega, &rho));
    }

    #[test]
    fn partition_count_matches_brute_force() {
        // f(a) >= f(b), f(c) > f(b), all bounded by 4.
        let p = poset(
            &[("a", l(4, 1)), ("b", l(4, 2)), ("c", l(4, 3))],
            &[("a", "b"), ("c", "b")],
        );
        let count = p.enumerate_partitions().unwrap().len();
        let covers = [(0usize, 1usize), (2, 1)];
        let brute = brute_force_partitions(3, &covers, &[1, 2, 3], &[4, 4, 4]);
        assert_eq!(count, brute.len());
        // The coefficient sum of K counts the same set.
        let k = p.k_polynomial().unwrap();
        let coeff_sum: i64 = k.terms().map(|(_, c)| c).sum();
        assert_eq!(coeff_sum as usize, count);
    }

    #[test]
    fn parse_poset_format() {
        let text = "# example\nelem a l(2,1)\nelem b l(2,2)\ncover a b weak\n";
        let p = parse_poset(text).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.covers(), &[(0, 1)]);
        // Wrong annotation is rejected: l(4,1) > l(2,2) makes the cover strict.
        let bad = "elem a l(4,1)\nelem b l(2,2)\ncover a b weak\n";
        assert!(parse_poset(bad).is_err());
        let strict = "elem a l(4,1)\nelem b l(2,2)\ncover a b strict\n";
        assert!(parse_poset(strict).is_ok());
    }
}
