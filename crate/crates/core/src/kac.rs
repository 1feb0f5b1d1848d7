//! Kac coordinates on marked affine Dynkin diagrams.
//!
//! An element of order `m` corresponds to a tuple `s` of nonnegative
//! integers with `Σ n_i s_i = m`, where `n_i` are the marks. The nodes with
//! `s_i = 0` form the Dynkin diagram of its centralizer.
//!
//! Node numbering for the extended E6 diagram:
//!
//! ```text
//! 1 - 2 - 3 - 5 - 6
//!         |
//!         4
//!         |
//!         0
//! ```
//!
//! with marks `(1, 1, 2, 3, 2, 2, 1)`. The twisted diagram `e6~2` folds
//! `1 ~ 6` and `2 ~ 5`, giving `0 - 4 - 3 <= (2,5) - (1,6)`.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};

/// A bond `(i, j, multiplicity)`. For multiple bonds `i` is the long root.
pub type Edge = (usize, usize, u32);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedAffineDiagram {
    #[serde(default)]
    pub name: String,
    pub nodes: Vec<String>,
    pub marks: Vec<u64>,
    pub edges: Vec<Edge>,
    #[serde(default)]
    pub folding: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n)
            | DynkinType::B(n)
            | DynkinType::C(n)
            | DynkinType::D(n)
            | DynkinType::E(n) => n,
            DynkinType::F4 => 4,
            DynkinType::G2 => 2,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::B(n) => write!(f, "B{n}"),
            DynkinType::C(n) => write!(f, "C{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
            DynkinType::F4 => f.write_str("F4"),
            DynkinType::G2 => f.write_str("G2"),
        }
    }
}

/// Product of simple types, largest rank first. Empty means a torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residual(pub Vec<DynkinType>);

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("T");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("×"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KacSolution {
    pub s: Vec<u64>,
    pub m: u64,
    pub gcd_filter: bool,
    pub folded: bool,
    pub residual: Residual,
}

impl KacSolution {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "s": self.s,
            "m": self.m,
            "gcd_filter": self.gcd_filter,
            "folded": self.folded,
            "residual": self.residual.to_string(),
        })
    }
}

impl MarkedAffineDiagram {
    /// Extended E6.
    pub fn e6_extended() -> Self {
        Self {
            name: "e6~".into(),
            nodes: (0..7).map(|i| format!("rho{i}")).collect(),
            marks: vec![1, 1, 2, 3, 2, 2, 1],
            edges: vec![(1, 2, 1), (2, 3, 1), (3, 5, 1), (5, 6, 1), (3, 4, 1), (4, 0, 1)],
            folding: Vec::new(),
        }
    }

    /// Extended E6 with the folding of the twisted diagram.
    pub fn e6_twisted() -> Self {
        Self {
            name: "e6~2".into(),
            folding: vec![(1, 6), (2, 5)],
            ..Self::e6_extended()
        }
    }

    /// A built-in name (`e6~`, `e6~2`) or the path of a JSON diagram file.
    pub fn load(name: &str) -> Result<Self> {
        match name {
            "e6~" => Ok(Self::e6_extended()),
            "e6~2" => Ok(Self::e6_twisted()),
            path => {
                let text = std::fs::read_to_string(Path::new(path))
                    .map_err(|e| Error::Parse(format!("cannot read diagram {path:?}: {e}")))?;
                let mut d: Self = serde_json::from_str(&text)
                    .map_err(|e| Error::Parse(format!("bad diagram {path:?}: {e}")))?;
                if d.name.is_empty() {
                    d.name = path.to_string();
                }
                d.validate()?;
                Ok(d)
            }
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let d: Self = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("bad diagram: {e}")))?;
        d.validate()?;
        Ok(d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }

    fn validate(&self) -> Result<()> {
        let n = self.nodes.len();
        if self.marks.len() != n {
            return Err(Error::Parse(format!(
                "{} marks for {n} nodes",
                self.marks.len()
            )));
        }
        if self.marks.contains(&0) {
            return Err(Error::Parse("marks must be positive".into()));
        }
        let in_range = |i: usize| i < n;
        if !self.edges.iter().all(|&(i, j, m)| in_range(i) && in_range(j) && i != j && m >= 1)
            || !self.folding.iter().all(|&(i, j)| in_range(i) && in_range(j))
        {
            return Err(Error::Parse("edge or folding refers to a missing node".into()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn has_folding(&self) -> bool {
        !self.folding.is_empty()
    }

    /// Whether `s` is constant on every folding orbit.
    pub fn is_symmetric(&self, s: &[u64]) -> bool {
        self.folding.iter().all(|&(i, j)| s[i] == s[j])
    }

    /// Representative (smallest index) of each node's folding orbit.
    fn orbit_rep(&self, i: usize) -> usize {
        let mut rep = i;
        loop {
            let next = self
                .folding
                .iter()
                .filter_map(|&(a, b)| {
                    if a == rep {
                        Some(b)
                    } else if b == rep {
                        Some(a)
                    } else {
                        None
                    }
                })
                .chain(std::iter::once(rep))
                .min()
                .expect("nonempty");
            if next == rep {
                return rep;
            }
            rep = next;
        }
    }

    fn orbit_size(&self, rep: usize) -> usize {
        (0..self.len()).filter(|&i| self.orbit_rep(i) == rep).count()
    }

    /// The folded diagram on orbit representatives. A bond between two
    /// orbits has multiplicity equal to the number of neighbours a node of
    /// the smaller orbit has in the larger one; the larger orbit becomes the
    /// long root, as in the twisted affine diagram.
    pub fn folded_edges(&self) -> Vec<Edge> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &(i, j, m) in &self.edges {
            let (ri, rj) = (self.orbit_rep(i), self.orbit_rep(j));
            if ri == rj || !seen.insert((ri.min(rj), ri.max(rj))) {
                continue;
            }
            let (si, sj) = (self.orbit_size(ri), self.orbit_size(rj));
            let (long, short) = if si > sj { (ri, rj) } else { (rj, ri) };
            let mult: u32 = if si == sj {
                m
            } else {
                let (small, big) = if si < sj { (ri, rj) } else { (rj, ri) };
                let big_orbit: Vec<usize> = (0..self.len()).filter(|&k| self.orbit_rep(k) == big).collect();
                self.edges
                    .iter()
                    .filter(|&&(a, b, _)| {
                        (a == small && big_orbit.contains(&b)) || (b == small && big_orbit.contains(&a))
                    })
                    .map(|e| e.2)
                    .sum()
            };
            if mult > 1 {
                out.push((long, short, mult));
            } else {
                out.push((ri, rj, 1));
            }
        }
        out
    }

    /// Type of the subdiagram on `{i : s_i = 0}`; on the folded diagram
    /// when `folded`.
    pub fn residual_diagram(&self, s: &[u64], folded: bool) -> Result<Residual> {
        if s.len() != self.len() {
            return Err(Error::ArityMismatch {
                expected: self.len(),
                actual: s.len(),
            });
        }
        let (nodes, edges): (Vec<usize>, Vec<Edge>) = if folded {
            if !self.is_symmetric(s) {
                return Err(Error::NotSymmetric(format!("{s:?}")));
            }
            let reps: Vec<usize> = (0..self.len()).filter(|&i| self.orbit_rep(i) == i).collect();
            (reps, self.folded_edges())
        } else {
            ((0..self.len()).collect(), self.edges.clone())
        };
        let keep: Vec<usize> = nodes.into_iter().filter(|&i| s[i] == 0).collect();
        let sub: Vec<Edge> = edges
            .into_iter()
            .filter(|&(i, j, _)| keep.contains(&i) && keep.contains(&j))
            .collect();
        let mut types = Vec::new();
        for comp in components(&keep, &sub) {
            let ce: Vec<Edge> = sub
                .iter()
                .copied()
                .filter(|&(i, _, _)| comp.contains(&i))
                .collect();
            types.push(classify_component(&comp, &ce)?);
        }
        types.sort_by(|a, b| b.rank().cmp(&a.rank()).then(a.cmp(b)));
        Ok(Residual(types))
    }

    /// All `s` with `Σ n_i s_i = m`, in lexicographic order, optionally
    /// restricted to `gcd(s) = 1` and to tuples constant on folding orbits.
    /// Residuals are computed on the folded diagram in folded mode.
    pub fn enumerate(&self, m: u64, gcd_filter: bool, folded: bool) -> Result<Vec<KacSolution>> {
        if m == 0 {
            return Err(Error::Parse("the order m must be at least 1".into()));
        }
        if folded && !self.has_folding() {
            return Err(Error::Parse(format!("diagram {} has no folding", self.name)));
        }
        let mut out = Vec::new();
        let mut s = vec![0u64; self.len()];
        self.search(0, m, &mut s, &mut |s| {
            if folded && !self.is_symmetric(s) {
                return Ok(());
            }
            if gcd_filter && s.iter().fold(0u64, |g, &x| g.gcd(&x)) != 1 {
                return Ok(());
            }
            out.push(KacSolution {
                s: s.to_vec(),
                m,
                gcd_filter,
                folded,
                residual: self.residual_diagram(s, folded)?,
            });
            Ok(())
        })?;
        Ok(out)
    }

    fn search(
        &self,
        i: usize,
        remaining: u64,
        s: &mut Vec<u64>,
        emit: &mut impl FnMut(&[u64]) -> Result<()>,
    ) -> Result<()> {
        if i == self.len() {
            return if remaining == 0 { emit(s) } else { Ok(()) };
        }
        for v in 0..=remaining / self.marks[i] {
            s[i] = v;
            self.search(i + 1, remaining - v * self.marks[i], s, emit)?;
        }
        s[i] = 0;
        Ok(())
    }
}

fn components(nodes: &[usize], edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut left: Vec<usize> = nodes.to_vec();
    let mut out = Vec::new();
    while let Some(start) = left.first().copied() {
        let mut comp = vec![start];
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for &(i, j, _) in edges {
                let other = if i == x {
                    j
                } else if j == x {
                    i
                } else {
                    continue;
                };
                if !comp.contains(&other) {
                    comp.push(other);
                    frontier.push(other);
                }
            }
        }
        left.retain(|n| !comp.contains(n));
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn neighbours(x: usize, edges: &[Edge]) -> Vec<usize> {
    edges
        .iter()
        .filter_map(|&(i, j, _)| {
            if i == x {
                Some(j)
            } else if j == x {
                Some(i)
            } else {
                None
            }
        })
        .collect()
}

/// Length of the simple-bond path leaving `from` away from `prev`.
fn arm_length(mut prev: usize, mut cur: usize, edges: &[Edge]) -> usize {
    let mut len = 1;
    loop {
        let next: Vec<usize> = neighbours(cur, edges).into_iter().filter(|&n| n != prev).collect();
        match next.as_slice() {
            [] => return len,
            [n] => {
                prev = cur;
                cur = *n;
                len += 1;
            }
            _ => return usize::MAX,
        }
    }
}

fn classify_component(nodes: &[usize], edges: &[Edge]) -> Result<DynkinType> {
    let n = nodes.len();
    let unrecognized = || Error::UnrecognizedType(format!("nodes {nodes:?}, bonds {edges:?}"));
    if edges.len() + 1 != n {
        return Err(unrecognized());
    }
    let multiple: Vec<&Edge> = edges.iter().filter(|e| e.2 > 1).collect();
    let max_degree = nodes.iter().map(|&x| neighbours(x, edges).len()).max().unwrap_or(0);
    match multiple.as_slice() {
        [] => {
            if max_degree <= 2 {
                return Ok(DynkinType::A(n));
            }
            let branch: Vec<usize> = nodes
                .iter()
                .copied()
                .filter(|&x| neighbours(x, edges).len() == 3)
                .collect();
            let [center] = branch.as_slice() else {
                return Err(unrecognized());
            };
            let mut arms: Vec<usize> = neighbours(*center, edges)
                .into_iter()
                .map(|nb| arm_length(*center, nb, edges))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Ok(DynkinType::D(k + 3)),
                [1, 2, 2] => Ok(DynkinType::E(6)),
                [1, 2, 3] => Ok(DynkinType::E(7)),
                [1, 2, 4] => Ok(DynkinType::E(8)),
                _ => Err(unrecognized()),
            }
        }
        [&(long, short, mult)] => {
            if max_degree > 2 {
                return Err(unrecognized());
            }
            if mult == 3 {
                return if n == 2 { Ok(DynkinType::G2) } else { Err(unrecognized()) };
            }
            if mult != 2 {
                return Err(unrecognized());
            }
            // nodes on the long side of the double bond are long
            let simple: Vec<Edge> = edges.iter().copied().filter(|e| e.2 == 1).collect();
            let n_long = 1 + side_count(long, short, &simple);
            let n_short = n - n_long;
            match (n_long, n_short) {
                (1, 1) => Ok(DynkinType::B(2)),
                (2, 2) if n == 4 => Ok(DynkinType::F4),
                (_, 1) => Ok(DynkinType::B(n)),
                (1, _) => Ok(DynkinType::C(n)),
                _ => Err(unrecognized()),
            }
        }
        _ => Err(unrecognized()),
    }
}

/// Nodes reachable from `start` through simple bonds, excluding `start`
/// and never crossing `blocked`.
fn side_count(start: usize, blocked: usize, simple: &[Edge]) -> usize {
    let mut seen = vec![start, blocked];
    let mut frontier = vec![start];
    let mut count = 0;
    while let Some(x) = frontier.pop() {
        for nb in neighbours(x, simple) {
            if !seen.contains(&nb) {
                seen.push(nb);
                frontier.push(nb);
                count += 1;
            }
        }
    }
    count
}
