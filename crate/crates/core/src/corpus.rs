//! The fixed desk-scale test corpus shared by the regression and acceptance
//! suites.

use crate::generate::{gen_binomial, gen_cyclic, gen_katsura};
use crate::problem::{parse_problem, ProblemSpec};

/// yz - z^2, y^2 - xt, xy - xz, x^2 - xy over F7, vars x > y > z > t.
pub const EXAMPLE_ONE_TEXT: &str = "\
char 7
vars x,y,z,t
y*z - z^2
y^2 - x*t
x*y - x*z
x^2 - x*y
";

/// yz - 2t^2, xy + t^2, x^2 z + 3xt^2 - 2yt^2 over F7, vars x > y > z > t.
pub const EXAMPLE_TWO_TEXT: &str = "\
char 7
vars x,y,z,t
y*z - 2*t^2
x*y + t^2
x^2*z + 3*x*t^2 - 2*y*t^2
";

pub fn example_one() -> ProblemSpec {
    parse_problem(EXAMPLE_ONE_TEXT).unwrap()
}

pub fn example_two() -> ProblemSpec {
    parse_problem(EXAMPLE_TWO_TEXT).unwrap()
}

/// The whole corpus: the two worked examples, cyclic-4..6, katsura-3..6 and
/// fifty seeded binomial systems with (n, d) cycling over
/// {4,5,6} x {2,3}.
pub fn corpus() -> Vec<(String, ProblemSpec)> {
    let mut out = vec![
        ("example-1".to_string(), example_one()),
        ("example-2".to_string(), example_two()),
    ];
    for n in 4..=6 {
        out.push((format!("cyclic-{n}"), gen_cyclic(n, false)));
    }
    for n in 3..=6 {
        out.push((format!("katsura-{n}"), gen_katsura(n, false)));
    }
    out.extend(binomial_family());
    out
}

/// The fifty seeded binomial systems alone.
pub fn binomial_family() -> Vec<(String, ProblemSpec)> {
    let combos = [(4usize, 2u32), (4, 3), (5, 2), (5, 3), (6, 2), (6, 3)];
    (0..50)
        .map(|i| {
            let (n, d) = combos[i % combos.len()];
            let seed = 1000 + i as u64;
            (
                format!("binomial-{n}-{d}-s{seed}"),
                gen_binomial(n, d, n, seed),
            )
        })
        .collect()
}

/// Small subset for quick cross-checks.
pub fn small_corpus() -> Vec<(String, ProblemSpec)> {
    vec![
        ("example-1".to_string(), example_one()),
        ("example-2".to_string(), example_two()),
        ("cyclic-4".to_string(), gen_cyclic(4, false)),
        ("katsura-3".to_string(), gen_katsura(3, false)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_has_expected_size() {
        let c = corpus();
        assert_eq!(c.len(), 2 + 3 + 4 + 50);
        // names unique
        let mut names: Vec<&String> = c.iter().map(|(n, _)| n).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }

    #[test]
    fn examples_parse() {
        assert_eq!(example_one().generators.len(), 4);
        assert_eq!(example_two().generators.len(), 3);
        assert!(example_one().homogeneous);
        assert!(example_two().homogeneous);
    }
}
