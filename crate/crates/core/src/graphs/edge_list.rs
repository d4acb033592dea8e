//! Plain-text edge lists: a header line `n d family`, then one `u v` line per edge
//! with `u < v`, ascending.

use super::{Family, Graph};
use crate::{Error, Result};

impl Graph {
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n(), self.degree(), self.family());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses an edge list. A non-custom family tag must match the edges exactly.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [n, d, family] = fields.as_slice() else {
            return Err(Error::Parse(format!("header must be `n d family`, got `{header}`")));
        };
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count `{n}`")))?;
        let d: usize = d
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree `{d}`")))?;
        let family: Family = family.parse()?;

        let mut adjacency = vec![false; n * n];
        for line in lines {
            let mut parts = line.split_whitespace().map(str::parse::<usize>);
            let (Some(Ok(u)), Some(Ok(v)), None) = (parts.next(), parts.next(), parts.next())
            else {
                return Err(Error::Parse(format!("bad edge line `{line}`")));
            };
            if u >= n || v >= n {
                return Err(Error::Parse(format!("edge `{line}` out of range for {n} vertices")));
            }
            adjacency[u * n + v] = true;
            adjacency[v * n + u] = true;
        }
        let graph = Graph::from_adjacency(n, adjacency, family)?;
        if graph.degree() != d {
            return Err(Error::Parse(format!(
                "header declares degree {d} but edges give {}",
                graph.degree()
            )));
        }
        if family != Family::Custom && family.build()? != graph {
            return Err(Error::Parse(format!("edges do not match family `{family}`")));
        }
        Ok(graph)
    }
}

#[cfg(test)]
mod tests {
    use crate::graphs::{cayley_symmetric, cycle_graph, Family, Graph};

    #[test]
    fn cycle_format() {
        let text = cycle_graph(4).unwrap().to_edge_list();
        assert_eq!(text, "4 2 cycle:4\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn round_trip() {
        let g = cayley_symmetric(4).unwrap();
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn custom_and_mismatched_tags() {
        let text = "4 2 custom\n0 1\n1 2\n2 3\n0 3\n";
        let g = Graph::from_edge_list(text).unwrap();
        assert_eq!(g.family(), Family::Custom);
        // a 4-cycle labelled as K_4 is rejected
        assert!(Graph::from_edge_list("4 2 complete:4\n0 1\n1 2\n2 3\n0 3\n").is_err());
        assert!(Graph::from_edge_list("4 3 custom\n0 1\n1 2\n2 3\n0 3\n").is_err());
        assert!(Graph::from_edge_list("4 2 custom\n0 1\n1 9\n").is_err());
        assert!(Graph::from_edge_list("").is_err());
    }
}
