//! One-way Macaulay2 script exporter: defines the edge ring and the ideal
//! (via the Gröbner set, which generates), then asserts that the degrees of
//! `mingens` match the generating degrees computed here. No runtime
//! dependency on Macaulay2; the script is an optional external cross-check.

use crate::graph::{Graph, DEFAULT_MAX_CYCLE_DIM};
use crate::ideal::{self, Monomial};
use crate::Result;

fn m2_monomial(g: &Graph, m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| {
            let (u, v) = g.edge(i);
            if e == 1 {
                format!("t_({u},{v})")
            } else {
                format!("t_({u},{v})^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Render the full cross-check script for one graph.
pub fn export_script(g: &Graph) -> Result<String> {
    let vars: Vec<String> = g
        .edges()
        .iter()
        .map(|&(u, v)| format!("t_({u},{v})"))
        .collect();
    let gens = ideal::groebner_set(g, DEFAULT_MAX_CYCLE_DIM)?;
    let binomials: Vec<String> = gens
        .iter()
        .map(|b| format!("  {} - {}", m2_monomial(g, b.lhs()), m2_monomial(g, b.rhs())))
        .collect();
    let degrees = ideal::generating_degrees(g)?;
    let expected: Vec<String> = degrees
        .iter()
        .flat_map(|(&d, &count)| std::iter::repeat(d.to_string()).take(count))
        .collect();

    let mut out = String::new();
    out.push_str("-- Cross-check of the minimal generating degrees of the\n");
    out.push_str("-- Eulerian ideal; run with: M2 --script <this file>\n");
    out.push_str(&format!("R = QQ[{}];\n", vars.join(", ")));
    out.push_str(&format!("I = ideal(\n{}\n);\n", binomials.join(",\n")));
    out.push_str("degs = sort flatten degrees source mingens I;\n");
    out.push_str(&format!(
        "assert(degs == {{{}}});\n",
        expected.join(", ")
    ));
    out.push_str("print \"generating degrees confirmed\";\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::*;

    #[test]
    fn script_shape() {
        let g = fig1();
        let script = export_script(&g).unwrap();
        assert!(script.contains("R = QQ[t_(1,2), t_(2,3), t_(3,4), t_(4,5), t_(5,6), t_(1,6), t_(2,5)];"));
        assert!(script.contains("degs = sort flatten degrees source mingens I;"));
        // fig1 generates entirely in degree 2
        let degrees = crate::ideal::generating_degrees(&g).unwrap();
        let count: usize = degrees.values().sum();
        assert!(script.contains(&format!(
            "assert(degs == {{{}}});",
            vec!["2"; count].join(", ")
        )));
    }

    #[test]
    fn script_contains_square_and_join_binomials() {
        let c6 = cycle(6);
        let script = export_script(&c6).unwrap();
        assert!(script.contains("t_(1,2)^2 - t_(2,3)^2"));
        // degree multiset ends with the degree-3 join binomial
        assert!(script.contains(", 3});"));
    }
}
