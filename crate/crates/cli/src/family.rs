use anyhow::{bail, Context, Result};
use orbitgraph::generators as gen;
use orbitgraph::Graph;

pub const FAMILIES: &str = "path N, cycle N, complete N, edgeless N, star N, bipartite A B, \
near-complete Q, grid M N, gpetersen N K, petersen";

/// Builds a graph from `[family, params...]`.
pub fn build(spec: &[String]) -> Result<Graph> {
    let (name, rest) = spec.split_first().context("missing family name")?;
    let params: Vec<usize> = rest
        .iter()
        .map(|p| p.parse::<usize>().with_context(|| format!("bad parameter {p:?}")))
        .collect::<Result<_>>()?;
    let arity = |k: usize| -> Result<()> {
        if params.len() != k {
            bail!("family {name} takes {k} parameter(s), got {}", params.len());
        }
        Ok(())
    };
    let g = match name.as_str() {
        "path" => {
            arity(1)?;
            gen::path(params[0])?
        }
        "cycle" => {
            arity(1)?;
            gen::cycle(params[0])?
        }
        "complete" => {
            arity(1)?;
            gen::complete(params[0])?
        }
        "edgeless" => {
            arity(1)?;
            gen::edgeless(params[0])?
        }
        "star" => {
            arity(1)?;
            gen::complete_bipartite(1, params[0])?
        }
        "bipartite" => {
            arity(2)?;
            gen::complete_bipartite(params[0], params[1])?
        }
        "near-complete" => {
            arity(1)?;
            gen::complete_minus_edge(params[0])?
        }
        "grid" => {
            arity(2)?;
            gen::grid(params[0], params[1])?
        }
        "gpetersen" => {
            arity(2)?;
            gen::generalized_petersen(params[0], params[1])?
        }
        "petersen" => {
            arity(0)?;
            gen::petersen()
        }
        other => bail!("unknown family {other:?}; known: {FAMILIES}"),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn builds_families() {
        assert_eq!(build(&spec("grid 5 2")).unwrap().size(), 13);
        assert_eq!(build(&spec("petersen")).unwrap().order(), 10);
        assert_eq!(build(&spec("star 3")).unwrap().degree(0), 3);
        assert!(build(&spec("grid 5")).is_err());
        assert!(build(&spec("cycle 2")).is_err());
        assert!(build(&spec("moebius 8")).is_err());
        assert!(build(&spec("path x")).is_err());
    }
}
