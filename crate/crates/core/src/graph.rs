//! Ordered graphs and red/blue colorings of the ordered complete graph.
//!
//! Vertices are labelled `1..=N`. An edge is always written `(i, j)` with
//! `i < j`, and edges are numbered lexicographically; that numbering is the
//! one used for bit positions in search masks, CNF variables and file rows.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Number of pairs `(i, j)` with `1 <= i < j <= n`.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Lexicographic id of the edge `(i, j)`, `i < j`, in `K_n`. Ids start at 0.
pub fn edge_id(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n, "edge ({i}, {j}) out of range for N={n}");
    // rows 1..i-1 hold (n-1) + (n-2) + ... + (n-i+1) pairs
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

/// Inverse of [`edge_id`].
pub fn edge_from_id(n: usize, mut id: usize) -> (usize, usize) {
    let mut i = 1;
    loop {
        let row = n - i;
        if id < row {
            return (i, i + 1 + id);
        }
        id -= row;
        i += 1;
        assert!(i < n, "edge id out of range for N={n}");
    }
}

/// Ordered graph on `[N]` backed by an upper-triangular bit matrix.
///
/// Row `i` stores the neighbours `j > i`; rows are padded to whole words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl OrderedGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD_BITS).max(1);
        OrderedGraph {
            n,
            words,
            bits: vec![0; words * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                g.insert(i, j);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation; loops and out-of-range labels are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidSpec(format!(
                    "edge ({u}, {v}) is not a pair of distinct vertices in [1, {n}]"
                )));
            }
            g.insert(u.min(v), u.max(v));
        }
        Ok(g)
    }

    /// Graph whose edges are the pairs selected by `keep`.
    pub fn from_fn(n: usize, mut keep: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                if keep(i, j) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Graph whose edge set is the set bits of `mask` under lexicographic ids.
    pub fn from_mask(n: usize, mask: u128) -> Self {
        let mut g = Self::empty(n);
        let mut id = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                if id < 128 && mask >> id & 1 == 1 {
                    g.insert(i, j);
                }
                id += 1;
            }
        }
        g
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    fn slot(&self, i: usize, j: usize) -> (usize, u64) {
        let col = j - 1;
        ((i - 1) * self.words + col / WORD_BITS, 1u64 << (col % WORD_BITS))
    }

    /// Adds `(i, j)`; requires `1 <= i < j <= N`.
    pub fn insert(&mut self, i: usize, j: usize) {
        assert!(1 <= i && i < j && j <= self.n, "edge ({i}, {j}) out of range");
        let (w, b) = self.slot(i, j);
        self.bits[w] |= b;
    }

    pub fn remove(&mut self, i: usize, j: usize) {
        assert!(1 <= i && i < j && j <= self.n, "edge ({i}, {j}) out of range");
        let (w, b) = self.slot(i, j);
        self.bits[w] &= !b;
    }

    /// Adjacency test; the pair may be given in either order.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        if i == j || i == 0 || j > self.n {
            return false;
        }
        let (w, b) = self.slot(i, j);
        self.bits[w] & b != 0
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n).flat_map(move |i| self.upper_neighbors(i).map(move |j| (i, j)))
    }

    /// Neighbours `j > i`, increasing.
    pub fn upper_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[(i - 1) * self.words..i * self.words];
        row.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * WORD_BITS + b + 1)
            })
        })
    }

    /// Neighbours `j < i`, increasing.
    pub fn lower_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (1..i).filter(move |&j| self.has_edge(j, i))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.lower_neighbors(v).count() + self.upper_neighbors(v).count()
    }

    /// Relabels every vertex `i` as `N + 1 - i`.
    pub fn reverse(&self) -> Self {
        let n = self.n;
        let mut g = Self::empty(n);
        for (i, j) in self.edges() {
            g.insert(n + 1 - j, n + 1 - i);
        }
        g
    }

    /// Edge set as a lexicographic-id bit mask; `None` when `C(N,2) > 128`.
    pub fn to_mask(&self) -> Option<u128> {
        if pair_count(self.n) > 128 {
            return None;
        }
        let n = self.n;
        Some(
            self.edges()
                .fold(0u128, |m, (i, j)| m | 1u128 << edge_id(n, i, j)),
        )
    }

    /// Every pair of `[N]` not in `self`.
    pub fn complement(&self) -> Self {
        Self::from_fn(self.n, |i, j| !self.has_edge(i, j))
    }
}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'R' | 'r' => Some(Color::Red),
            'B' | 'b' => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Red => f.write_str("red"),
            Color::Blue => f.write_str("blue"),
        }
    }
}

/// Red/blue coloring of every edge of `K_N`. Stored as its red subgraph;
/// every other pair is blue.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedColoring {
    red: OrderedGraph,
}

impl OrderedColoring {
    pub fn monochromatic(n: usize, color: Color) -> Self {
        match color {
            Color::Red => OrderedColoring {
                red: OrderedGraph::complete(n),
            },
            Color::Blue => OrderedColoring {
                red: OrderedGraph::empty(n),
            },
        }
    }

    pub fn from_fn(n: usize, mut color: impl FnMut(usize, usize) -> Color) -> Self {
        OrderedColoring {
            red: OrderedGraph::from_fn(n, |i, j| color(i, j) == Color::Red),
        }
    }

    /// Coloring whose red class is `red`.
    pub fn from_red_graph(red: OrderedGraph) -> Self {
        OrderedColoring { red }
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.red.n_vertices()
    }

    /// Color of the pair `{u, v}`, in either order.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        debug_assert!(u != v && u.max(v) <= self.n_vertices());
        if self.red.has_edge(u, v) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn set(&mut self, i: usize, j: usize, color: Color) {
        match color {
            Color::Red => self.red.insert(i, j),
            Color::Blue => self.red.remove(i, j),
        }
    }

    pub fn class(&self, color: Color) -> OrderedGraph {
        match color {
            Color::Red => self.red.clone(),
            Color::Blue => self.red.complement(),
        }
    }

    pub fn red_graph(&self) -> &OrderedGraph {
        &self.red
    }

    pub fn blue_graph(&self) -> OrderedGraph {
        self.red.complement()
    }

    pub fn swap_colors(&self) -> Self {
        OrderedColoring {
            red: self.red.complement(),
        }
    }

    pub fn reverse(&self) -> Self {
        OrderedColoring {
            red: self.red.reverse(),
        }
    }
}

impl fmt::Debug for OrderedColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderedColoring")
            .field("n", &self.n_vertices())
            .field("red", &self.red.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_ids_are_lexicographic() {
        let n = 7;
        let mut expected = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                assert_eq!(edge_id(n, i, j), expected);
                assert_eq!(edge_from_id(n, expected), (i, j));
                expected += 1;
            }
        }
        assert_eq!(expected, pair_count(n));
    }

    #[test]
    fn rows_wider_than_a_word() {
        let mut g = OrderedGraph::empty(130);
        g.insert(1, 130);
        g.insert(64, 65);
        g.insert(2, 66);
        assert!(g.has_edge(130, 1));
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.upper_neighbors(2).collect::<Vec<_>>(), vec![66]);
        assert_eq!(g.lower_neighbors(65).collect::<Vec<_>>(), vec![64]);
        assert_eq!(g.reverse().edges().collect::<Vec<_>>(), vec![(1, 130), (65, 129), (66, 67)]);
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(OrderedGraph::from_edges(3, [(2, 2)]).is_err());
        assert!(OrderedGraph::from_edges(3, [(1, 4)]).is_err());
        assert!(OrderedGraph::from_edges(3, [(0, 1)]).is_err());
        let g = OrderedGraph::from_edges(3, [(3, 1), (1, 3)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn mask_round_trip() {
        let g = OrderedGraph::from_edges(6, [(1, 6), (2, 3), (4, 5)]).unwrap();
        let m = g.to_mask().unwrap();
        assert_eq!(OrderedGraph::from_mask(6, m), g);
        assert_eq!(m.count_ones() as usize, g.edge_count());
    }

    #[test]
    fn classes_partition_the_pairs() {
        let c = OrderedColoring::from_fn(9, |i, j| if (i * j) % 3 == 0 { Color::Red } else { Color::Blue });
        let red = c.class(Color::Red);
        let blue = c.class(Color::Blue);
        assert_eq!(red.edge_count() + blue.edge_count(), pair_count(9));
        assert!(red.edges().all(|(i, j)| !blue.has_edge(i, j)));
        assert_eq!(c.swap_colors().swap_colors(), c);
        assert_eq!(c.reverse().reverse(), c);
    }
}
