//! CNF encoding of "some coloring of `K_N` has no monochromatic copy".
//!
//! Variable `k` is the edge with lexicographic id `k - 1`; a true variable
//! means red. Each `n`-subset contributes a not-all-red and a not-all-blue
//! clause over the edges of its copy.

use std::fmt::Write as _;

use crate::contain::{contains_mono_path, copy_on, for_each_subset};
use crate::error::{Error, Result};
use crate::graph::{edge_id, pair_count, Color, OrderedColoring, OrderedGraph};
use crate::path::PathSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    pub spec: PathSpec,
    pub n_vertices: usize,
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

pub fn encode_cnf(spec: &PathSpec, n_vertices: usize) -> CnfInstance {
    let mut clauses = Vec::new();
    for_each_subset(n_vertices, spec.n(), |s| {
        let vars: Vec<i32> = copy_on(spec, s)
            .windows(2)
            .map(|w| edge_id(n_vertices, w[0].min(w[1]), w[0].max(w[1])) as i32 + 1)
            .collect();
        clauses.push(vars.iter().map(|v| -v).collect());
        clauses.push(vars);
    });
    CnfInstance {
        spec: *spec,
        n_vertices,
        num_vars: pair_count(n_vertices),
        clauses,
    }
}

impl CnfInstance {
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "c ordered Ramsey instance {} on N={}", self.spec, self.n_vertices);
        let _ = writeln!(out, "c variable k is edge id k-1 in lexicographic order; true = red");
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Reads a solver model: whitespace-separated literals, optionally on `v`
/// lines, with `c` and `s` lines ignored and a `0` ending the list.
pub fn parse_model(text: &str) -> Result<Vec<i32>> {
    let mut lits = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let mut tokens = line.split_whitespace().peekable();
        match tokens.peek() {
            Some(&"c") | Some(&"s") | None => continue,
            Some(&"v") => {
                tokens.next();
            }
            _ => {}
        }
        for tok in tokens {
            let lit: i32 = tok
                .parse()
                .map_err(|_| Error::Parse {
                    line: lineno + 1,
                    message: format!("bad literal {tok:?}"),
                })?;
            if lit == 0 {
                return Ok(lits);
            }
            lits.push(lit);
        }
    }
    Ok(lits)
}

/// Turns a model into a coloring without checking it.
pub fn model_to_coloring(n_vertices: usize, model: &[i32]) -> Result<OrderedColoring> {
    let vars = pair_count(n_vertices);
    let mut value: Vec<Option<bool>> = vec![None; vars];
    for &lit in model {
        let var = lit.unsigned_abs() as usize;
        if var == 0 || var > vars {
            return Err(Error::EncodingBug(format!("literal {lit} outside 1..={vars}")));
        }
        let v = lit > 0;
        match value[var - 1] {
            Some(old) if old != v => {
                return Err(Error::EncodingBug(format!("variable {var} assigned both ways")));
            }
            _ => value[var - 1] = Some(v),
        }
    }
    if let Some(missing) = value.iter().position(Option::is_none) {
        return Err(Error::IncompleteModel(missing + 1));
    }
    let mut red = OrderedGraph::empty(n_vertices);
    let mut id = 0;
    for i in 1..=n_vertices {
        for j in i + 1..=n_vertices {
            if value[id] == Some(true) {
                red.insert(i, j);
            }
            id += 1;
        }
    }
    Ok(OrderedColoring::from_red_graph(red))
}

/// Decodes a model and checks that the coloring has no monochromatic copy.
pub fn decode_cnf_model(spec: &PathSpec, n_vertices: usize, model: &[i32]) -> Result<OrderedColoring> {
    let c = model_to_coloring(n_vertices, model)?;
    for color in [Color::Red, Color::Blue] {
        if let Some(cert) = contains_mono_path(&c, spec, color) {
            return Err(Error::EncodingBug(format!(
                "decoded coloring has a {color} copy of {spec} at {:?}",
                cert.vertices
            )));
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let cnf = encode_cnf(&PathSpec::ap(4).unwrap(), 6);
        assert_eq!((cnf.num_vars, cnf.clauses.len()), (15, 30));
        assert!(cnf.to_dimacs().contains("p cnf 15 30\n"));
        let cnf = encode_cnf(&PathSpec::ap(2).unwrap(), 2);
        assert!(cnf.to_dimacs().contains("p cnf 1 2\n"));
        assert_eq!(encode_cnf(&PathSpec::ap(5).unwrap(), 5).clauses.len(), 2);
    }

    #[test]
    fn model_parsing() {
        let text = "c comment\ns SATISFIABLE\nv 1 -2\nv 3 0\n";
        assert_eq!(parse_model(text).unwrap(), vec![1, -2, 3]);
        assert_eq!(parse_model("1 2 -3").unwrap(), vec![1, 2, -3]);
        assert!(parse_model("v 1 x").is_err());
    }

    #[test]
    fn decoding() {
        let c = model_to_coloring(3, &[1, 2, 3]).unwrap();
        assert_eq!(c, OrderedColoring::monochromatic(3, Color::Red));
        assert!(matches!(model_to_coloring(3, &[1, 2]), Err(Error::IncompleteModel(3))));
        assert!(matches!(model_to_coloring(3, &[1, 2, 3, -1]), Err(Error::EncodingBug(_))));
        let ap4 = PathSpec::ap(4).unwrap();
        assert!(decode_cnf_model(&ap4, 3, &[1, 2, 3]).is_ok());
        assert!(matches!(decode_cnf_model(&ap4, 4, &[1, 2, 3, 4, 5, 6]), Err(Error::EncodingBug(_))));
    }
}
