//! The ordered path families and certificates witnessing their copies.
//!
//! For even `n = 2k` the four paths `P^{r1,r2}` alternate between
//! `A = [1, k]` and `B = [k+1, 2k]`, starting from the endpoint in `A`;
//! `r1`/`r2` say whether `A`/`B` are visited in increasing or decreasing
//! order. The alternating path is `P^{<,>}` and is also defined for odd `n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Color, OrderedColoring, OrderedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathFamily {
    /// Alternating path `1, n, 2, n-1, ...` (`P^{<,>}`).
    Ap,
    /// `P^{<,<}`.
    Pll,
    /// `P^{>,>}`.
    Pgg,
    /// `P^{>,<}`, the reversal of the alternating path.
    Pgl,
    /// Monotone path `1, 2, ..., n`.
    Mp,
}

impl PathFamily {
    pub const ALL: [PathFamily; 5] = [
        PathFamily::Ap,
        PathFamily::Pll,
        PathFamily::Pgg,
        PathFamily::Pgl,
        PathFamily::Mp,
    ];

    /// The four even-length families alternating between the two halves.
    pub const HALVES: [PathFamily; 4] = [PathFamily::Ap, PathFamily::Pll, PathFamily::Pgg, PathFamily::Pgl];

    pub fn name(self) -> &'static str {
        match self {
            PathFamily::Ap => "ap",
            PathFamily::Pll => "pll",
            PathFamily::Pgg => "pgg",
            PathFamily::Pgl => "pgl",
            PathFamily::Mp => "mp",
        }
    }

    pub fn requires_even(self) -> bool {
        matches!(self, PathFamily::Pll | PathFamily::Pgg | PathFamily::Pgl)
    }

    /// Family obtained by relabelling `i -> n + 1 - i`.
    pub fn reversed(self) -> PathFamily {
        match self {
            PathFamily::Ap => PathFamily::Pgl,
            PathFamily::Pgl => PathFamily::Ap,
            // both halves swap and both orders flip, giving the same pattern
            other => other,
        }
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PathFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ap" | "p<>" | "plg" => Ok(PathFamily::Ap),
            "pll" | "p<<" => Ok(PathFamily::Pll),
            "pgg" | "p>>" => Ok(PathFamily::Pgg),
            "pgl" | "p><" => Ok(PathFamily::Pgl),
            "mp" => Ok(PathFamily::Mp),
            _ => Err(Error::InvalidSpec(format!("unknown path family `{s}`"))),
        }
    }
}

/// A path family together with its number of vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathSpec {
    family: PathFamily,
    n: usize,
}

impl PathSpec {
    pub fn new(family: PathFamily, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("{family} needs at least 2 vertices, got {n}")));
        }
        if family.requires_even() && n % 2 == 1 {
            return Err(Error::InvalidSpec(format!("{family} is only defined for even n, got {n}")));
        }
        Ok(PathSpec { family, n })
    }

    pub fn ap(n: usize) -> Result<Self> {
        Self::new(PathFamily::Ap, n)
    }

    pub fn family(&self) -> PathFamily {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Spec of the reversed pattern. The odd alternating path reverses to a
    /// pattern outside the supported families.
    pub fn reversed(&self) -> Result<PathSpec> {
        PathSpec::new(self.family.reversed(), self.n)
    }

    /// Labels of the canonical copy on `[n]` in traversal order, starting
    /// from the endpoint in the lower half (or at 1 for the monotone path).
    pub fn traversal(&self) -> Vec<usize> {
        let n = self.n;
        match self.family {
            PathFamily::Mp => (1..=n).collect(),
            PathFamily::Ap => {
                let (mut lo, mut hi) = (1, n);
                (0..n)
                    .map(|t| {
                        if t % 2 == 0 {
                            lo += 1;
                            lo - 1
                        } else {
                            hi -= 1;
                            hi + 1
                        }
                    })
                    .collect()
            }
            fam => {
                let k = n / 2;
                let (a_up, b_up) = match fam {
                    PathFamily::Pll => (true, true),
                    PathFamily::Pgg => (false, false),
                    PathFamily::Pgl => (false, true),
                    _ => unreachable!(),
                };
                (0..k)
                    .flat_map(|s| {
                        let a = if a_up { 1 + s } else { k - s };
                        let b = if b_up { k + 1 + s } else { 2 * k - s };
                        [a, b]
                    })
                    .collect()
            }
        }
    }

    /// The `n - 1` edges of the canonical copy, in traversal order, each
    /// written with the smaller label first.
    pub fn path_edges(&self) -> Vec<(usize, usize)> {
        let t = self.traversal();
        t.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect()
    }

    /// The canonical copy as an ordered graph on `[n]`.
    pub fn pattern_graph(&self) -> OrderedGraph {
        OrderedGraph::from_edges(self.n, self.path_edges()).expect("canonical path edges are in range")
    }
}

impl fmt::Display for PathSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)
    }
}

/// Free-function form of [`PathSpec::path_edges`].
pub fn path_edges(spec: &PathSpec) -> Vec<(usize, usize)> {
    spec.path_edges()
}

/// A copy of a path in a host: the host vertices `v_1..v_n` in traversal
/// order, plus the colour of the copy when the host is a coloring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathCertificate {
    pub spec: PathSpec,
    pub vertices: Vec<usize>,
    pub color: Option<Color>,
}

impl PathCertificate {
    pub fn new(spec: PathSpec, vertices: Vec<usize>, color: Option<Color>) -> Self {
        PathCertificate { spec, vertices, color }
    }

    /// Checks length, distinctness, range and that the relative order of the
    /// vertices matches the canonical traversal.
    pub fn check_pattern(&self, n_vertices: usize) -> Result<()> {
        let n = self.spec.n();
        if self.vertices.len() != n {
            return Err(Error::InvalidCertificate(format!(
                "{} vertices listed, {} expected",
                self.vertices.len(),
                n
            )));
        }
        if let Some(&v) = self.vertices.iter().find(|&&v| v == 0 || v > n_vertices) {
            return Err(Error::InvalidCertificate(format!("vertex {v} outside [1, {n_vertices}]")));
        }
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCertificate("repeated vertex".into()));
        }
        for (t, (&v, &want)) in self.vertices.iter().zip(self.spec.traversal().iter()).enumerate() {
            let rank = sorted.binary_search(&v).unwrap() + 1;
            if rank != want {
                return Err(Error::InvalidCertificate(format!(
                    "position {} holds the {}-th smallest vertex, pattern needs the {}-th",
                    t + 1,
                    rank,
                    want
                )));
            }
        }
        Ok(())
    }

    /// Validates the certificate as an uncoloured copy inside `g`.
    pub fn validate_in_graph(&self, g: &OrderedGraph) -> Result<()> {
        self.check_pattern(g.n_vertices())?;
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::InvalidCertificate(format!("({}, {}) is not an edge", w[0], w[1])));
            }
        }
        Ok(())
    }

    /// Validates the certificate as a monochromatic copy in `c`, in the
    /// colour the certificate names.
    pub fn validate_in_coloring(&self, c: &OrderedColoring) -> Result<()> {
        let color = self
            .color
            .ok_or_else(|| Error::InvalidCertificate("coloring certificate without a colour".into()))?;
        self.check_pattern(c.n_vertices())?;
        for w in self.vertices.windows(2) {
            if c.color(w[0], w[1]) != color {
                return Err(Error::InvalidCertificate(format!(
                    "({}, {}) is {}, not {}",
                    w[0],
                    w[1],
                    c.color(w[0], w[1]),
                    color
                )));
            }
        }
        Ok(())
    }

    /// The same copy seen in the reversed host, read from its lower endpoint.
    pub fn reversed(&self, n_vertices: usize) -> Result<PathCertificate> {
        let mut vertices: Vec<usize> = self.vertices.iter().map(|&v| n_vertices + 1 - v).collect();
        let spec = self.spec.reversed()?;
        // the reversed sequence starts at the old upper end; flip it when the
        // canonical traversal of the new family starts at the other endpoint
        let want_first = spec.traversal()[0];
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted[want_first - 1] != vertices[0] {
            vertices.reverse();
        }
        Ok(PathCertificate {
            spec,
            vertices,
            color: self.color,
        })
    }
}
