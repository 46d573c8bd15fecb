//! Indexed forests: disjoint integer intervals each carrying a rooted plane
//! binary tree. Their flagged posets realize the forest polynomials, a basis
//! of the polynomial ring indexed by exponent vectors through left-branch
//! counts.

use crate::letter::{InjectiveWord, Letter};
use crate::nvector::NVector;
use crate::poly::Polynomial;
use crate::poset::FlaggedPoset;
use crate::slide::{slide_series, SlideExpansion};
use crate::{Error, Result};
use std::fmt;

/// A rooted plane binary tree; leaves are implicit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlaneTree {
    Leaf,
    Node(Box<PlaneTree>, Box<PlaneTree>),
}

impl PlaneTree {
    pub fn node(left: PlaneTree, right: PlaneTree) -> PlaneTree {
        PlaneTree::Node(Box::new(left), Box::new(right))
    }

    pub fn internal_count(&self) -> usize {
        match self {
            PlaneTree::Leaf => 0,
            PlaneTree::Node(l, r) => 1 + l.internal_count() + r.internal_count(),
        }
    }

    fn parse(s: &str) -> Result<(PlaneTree, &str)> {
        let s = s.trim_start();
        if let Some(rest) = s.strip_prefix('.') {
            return Ok((PlaneTree::Leaf, rest));
        }
        let rest = s
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` or `.` at {s:?}")))?;
        let (left, rest) = PlaneTree::parse(rest)?;
        let rest = rest
            .trim_start()
            .strip_prefix(',')
            .ok_or_else(|| Error::Parse(format!("expected `,` at {rest:?}")))?;
        let (right, rest) = PlaneTree::parse(rest)?;
        let rest = rest
            .trim_start()
            .strip_prefix(')')
            .ok_or_else(|| Error::Parse(format!("expected `)` at {rest:?}")))?;
        Ok((PlaneTree::node(left, right), rest))
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneTree::Leaf => write!(f, "."),
            PlaneTree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl std::str::FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<PlaneTree> {
        let (tree, rest) = PlaneTree::parse(s)?;
        if !rest.trim().is_empty() {
            return Err(Error::Parse(format!("trailing input after tree: {rest:?}")));
        }
        Ok(tree)
    }
}

/// A disjoint family of indexed trees. A tree on interval `[a,b]` has
/// `b - a` internal nodes and its `b - a + 1` leaves are labeled `a..=b`
/// left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexedForest {
    trees: Vec<(i32, i32, PlaneTree)>,
}

impl IndexedForest {
    pub fn new(mut trees: Vec<(i32, i32, PlaneTree)>) -> Result<IndexedForest> {
        trees.sort_by_key(|&(a, _, _)| a);
        for &(a, b, ref t) in &trees {
            if a >= b {
                return Err(Error::Forest(format!("interval [{a},{b}] needs a < b")));
            }
            let want = (b - a) as usize;
            if t.internal_count() != want {
                return Err(Error::Forest(format!(
                    "tree on [{a},{b}] has {} internal nodes, expected {want}",
                    t.internal_count()
                )));
            }
        }
        for pair in trees.windows(2) {
            let (_, b0, _) = pair[0];
            let (a1, _, _) = pair[1];
            if a1 <= b0 {
                return Err(Error::Forest(format!(
                    "intervals overlap near {a1} (previous ends at {b0})"
                )));
            }
        }
        Ok(IndexedForest { trees })
    }

    pub fn empty() -> IndexedForest {
        IndexedForest { trees: Vec::new() }
    }

    pub fn trees(&self) -> &[(i32, i32, PlaneTree)] {
        &self.trees
    }

    /// Total number of internal nodes.
    pub fn size(&self) -> usize {
        self.trees.iter().map(|(a, b, _)| (b - a) as usize).sum()
    }

    /// Internal nodes as flag letters: a node whose leftmost descendant leaf
    /// is `m`, sitting at height `j` on that left branch, carries `l(m,j)`.
    /// Listed bottom-up along each branch, branches by increasing leaf.
    fn flag_letters(&self) -> Vec<(Letter, Option<Letter>, Option<Letter>)> {
        // Each entry: (node letter, left child letter, right child letter);
        // leaf children yield None.
        let mut out = Vec::new();
        for &(a, _, ref tree) in &self.trees {
            let mut next_leaf = a;
            collect_nodes(tree, &mut next_leaf, &mut out);
        }
        out.sort_by_key(|&(l, _, _)| l);
        out
    }

    /// The Hasse diagram of the forest (children below parents) with the
    /// left-branch flag.
    pub fn flagged_poset(&self) -> FlaggedPoset {
        let nodes = self.flag_letters();
        let elements: Vec<(String, Letter)> =
            nodes.iter().map(|&(l, _, _)| (l.to_string(), l)).collect();
        let mut covers = Vec::new();
        for &(parent, left, right) in &nodes {
            for child in [left, right].into_iter().flatten() {
                covers.push((child.to_string(), parent.to_string()));
            }
        }
        FlaggedPoset::new(elements, covers).expect("forest posets are valid")
    }

    /// Left-branch counts: entry `i` is the number of internal nodes whose
    /// left branch ends at leaf `i`.
    pub fn c_vector(&self) -> NVector {
        let mut c = NVector::zero();
        for (letter, _, _) in self.flag_letters() {
            c.add_at(letter.value(), 1);
        }
        c
    }

    /// The unique forest whose left-branch counts equal `c`, built by a
    /// left-to-right scan keeping a stack of nodes awaiting right subtrees.
    pub fn from_c(c: &NVector) -> IndexedForest {
        let Some(start) = c.min_index() else {
            return IndexedForest::empty();
        };
        let max = c.max_index().unwrap();
        // Stack entries: (leaf, tier, left subtree); tier counts position on
        // the leaf's branch, the top entry is completed first.
        let mut stack: Vec<(i32, u32, PlaneTree)> = Vec::new();
        let mut trees = Vec::new();
        let mut leaf = start;
        loop {
            let demand = c.get(leaf);
            if demand == 0 && stack.is_empty() {
                if leaf > max {
                    break;
                }
                leaf += 1;
                continue;
            }
            for tier in (1..=demand).rev() {
                stack.push((leaf, tier, PlaneTree::Leaf));
            }
            // With a pending chain pushed, the leaf itself is its bottom
            // node's left child; otherwise it is a complete subtree.
            let mut complete: Option<(i32, PlaneTree)> = if demand == 0 {
                Some((leaf, PlaneTree::Leaf))
            } else {
                None
            };
            while let Some((root_leaf, subtree)) = complete.take() {
                match stack.pop() {
                    None => {
                        // A finished tree spans from its root's leaf to here.
                        trees.push((root_leaf, leaf, subtree));
                    }
                    Some((m, tier, left)) => {
                        let joined = PlaneTree::node(left, subtree);
                        if tier == c.get(m) {
                            // Chain root completed; cascades upward.
                            complete = Some((m, joined));
                        } else {
                            // Wire as left child of the next node on the branch.
                            let top = stack.last_mut().expect("chain continues");
                            debug_assert_eq!((top.0, top.1), (m, tier + 1));
                            top.2 = joined;
                        }
                    }
                }
            }
            leaf += 1;
        }
        IndexedForest::new(trees).expect("scan yields disjoint intervals")
    }

    /// The generating polynomial of the flagged poset; requires the forest to
    /// sit inside the positive integers.
    pub fn polynomial(&self) -> Result<Polynomial> {
        self.flagged_poset().k_polynomial()
    }

    /// Words read from the flag along each linear extension (equivalently,
    /// decreasing labelings of the forest), bottom to top.
    pub fn decreasing_labelings(&self) -> Vec<InjectiveWord> {
        let poset = self.flagged_poset();
        poset
            .linear_extensions()
            .iter()
            .map(|ext| poset.extension_word(ext))
            .collect()
    }

    /// One slide term per decreasing labeling; the terms sum back to the
    /// forest polynomial.
    pub fn slide_expansion(&self) -> Result<SlideExpansion> {
        let mut out = SlideExpansion::new();
        for word in self.decreasing_labelings() {
            if let Some(c) = word.rs_polynomial() {
                out.add_term(&c, 1);
            } else if !slide_series(&word).is_zero() {
                // The normalization and the series must agree on vanishing.
                unreachable!("nonzero series with no normal form");
            }
        }
        Ok(out)
    }
}

fn collect_nodes(
    tree: &PlaneTree,
    next_leaf: &mut i32,
    out: &mut Vec<(Letter, Option<Letter>, Option<Letter>)>,
) {
    // Returns (leftmost leaf, branch height, letter) for `tree` if internal.
    fn walk(
        tree: &PlaneTree,
        next_leaf: &mut i32,
        out: &mut Vec<(Letter, Option<Letter>, Option<Letter>)>,
    ) -> Option<(i32, u32, Letter)> {
        match tree {
            PlaneTree::Leaf => {
                *next_leaf += 1;
                None
            }
            PlaneTree::Node(l, r) => {
                let my_leaf = *next_leaf;
                let left = walk(l, next_leaf, out);
                let right = walk(r, next_leaf, out);
                let height = left.map_or(1, |(_, h, _)| h + 1);
                let letter = Letter::new(my_leaf, height);
                out.push((letter, left.map(|x| x.2), right.map(|x| x.2)));
                Some((my_leaf, height, letter))
            }
        }
    }
    walk(tree, next_leaf, out);
}

/// Expands a positive polynomial in the forest basis by revlex elimination.
pub fn expand_in_forest_basis(p: &Polynomial) -> Result<SlideExpansion> {
    if let Some(m) = p.min_variable() {
        if m < 1 {
            return Err(Error::NonPositiveSupport(m));
        }
    }
    let mut out = SlideExpansion::new();
    for mut component in p.homogeneous_components() {
        while !component.is_zero() {
            let (lead, coeff) = component.revlex_leading()?;
            out.add_term(&lead, coeff);
            let basis = IndexedForest::from_c(&lead).polynomial()?;
            component = &component - &basis.scale(coeff);
        }
    }
    Ok(out)
}

/// Reassembles a forest-basis expansion into a polynomial.
pub fn forest_expansion_to_polynomial(e: &SlideExpansion) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for (c, k) in e.terms() {
        out = &out + &IndexedForest::from_c(c).polynomial()?.scale(k);
    }
    Ok(out)
}

impl fmt::Display for IndexedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b, tree) in &self.trees {
            writeln!(f, "tree [{a},{b}] {tree}")?;
        }
        Ok(())
    }
}

/// Parses the forest file format: `tree [a,b] <nested-pairs>` lines with `#`
/// comments. The empty file is the empty forest.
pub fn parse_forest(input: &str) -> Result<IndexedForest> {
    let mut trees = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let rest = line
            .strip_prefix("tree")
            .ok_or_else(|| bad("expected `tree [a,b] <shape>`"))?
            .trim_start();
        let rest = rest.strip_prefix('[').ok_or_else(|| bad("expected `[a,b]`"))?;
        let (ival, shape) = rest
            .split_once(']')
            .ok_or_else(|| bad("unclosed interval"))?;
        let (a, b) = ival.split_once(',').ok_or_else(|| bad("expected `a,b`"))?;
        let a: i32 = a.trim().parse().map_err(|_| bad("bad interval start"))?;
        let b: i32 = b.trim().parse().map_err(|_| bad("bad interval end"))?;
        let tree: PlaneTree = shape.trim().parse()?;
        trees.push((a, b, tree));
    }
    IndexedForest::new(trees)
}
