//! Smith normal form over the integers and abelian invariants.

use serde::Serialize;

use super::presentation::Presentation;

/// Diagonal of the Smith normal form of `m` (length `min(rows, cols)`),
/// nonnegative, each entry dividing the next; zeros last.
pub fn smith_normal_form(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut diag = Vec::with_capacity(rows.min(cols));
    for t in 0..rows.min(cols) {
        loop {
            // pivot: least nonzero absolute value in the trailing block
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                diag.extend(std::iter::repeat_n(0, rows.min(cols) - t));
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs() as i64);
    }
    diag
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relation_matrix(pres: &Presentation) -> Vec<Vec<i64>> {
    pres.relators()
        .iter()
        .map(|r| {
            let mut row = vec![0i64; pres.generator_count()];
            for &g in r {
                row[g.unsigned_abs() as usize - 1] += g.signum() as i64;
            }
            row
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    /// Torsion invariant factors, each at least 2, each dividing the next.
    pub invariants: Vec<u64>,
    pub free_rank: usize,
}

impl Abelianization {
    pub fn from_relation_matrix(m: &[Vec<i64>], generators: usize) -> Self {
        let diag = if m.is_empty() { Vec::new() } else { smith_normal_form(m) };
        let nonzero = diag.iter().filter(|&&d| d != 0).count();
        Abelianization {
            invariants: diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect(),
            free_rank: generators - nonzero,
        }
    }

    /// Order of the abelianization, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.invariants.iter().product())
    }
}

impl std::fmt::Display for Abelianization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.invariants.iter().map(|d| format!("Z{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

pub fn abelianization(pres: &Presentation) -> Abelianization {
    Abelianization::from_relation_matrix(&relation_matrix(pres), pres.generator_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn ab(text: &str) -> (Vec<u64>, usize) {
        let a = abelianization(&Presentation::parse(text).unwrap());
        (a.invariants, a.free_rank)
    }

    #[test]
    fn examples() {
        assert_eq!(abelianization(&Presentation::triangle(4, 8, 8)).invariants, vec![4, 8]);
        assert_eq!(abelianization(&Presentation::triangle(5, 5, 5)).invariants, vec![5, 5]);
        assert_eq!(ab("<a,b | [a,b]>"), (vec![], 2));
        assert_eq!(ab("<a | a^6>"), (vec![6], 0));
        assert_eq!(ab("<a,b | a^2, b^3, (ab)^7>"), (vec![], 0));
        assert_eq!(ab("<a,b | a^4, b^6>"), (vec![2, 12], 0));
        assert_eq!(ab("<a,b,c | a^2>"), (vec![2], 2));
    }

    /// Determinant divisors: d_1...d_k = gcd of all k×k minors.
    fn minor_gcds(m: &[Vec<i64>]) -> Vec<i64> {
        fn det(m: &[Vec<i64>]) -> i64 {
            match m.len() {
                1 => m[0][0],
                2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
                _ => (0..m.len())
                    .map(|j| {
                        let sub: Vec<Vec<i64>> =
                            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
                        let s = if j % 2 == 0 { 1 } else { -1 };
                        s * m[0][j] * det(&sub)
                    })
                    .sum(),
            }
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            (0..n).flat_map(|last| subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })).collect()
        }
        let (r, c) = (m.len(), m[0].len());
        (1..=r.min(c))
            .map(|k| {
                let mut g = 0i64;
                for rs in subsets(r, k) {
                    for cs in subsets(c, k) {
                        let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                        g = g.gcd(&det(&sub));
                    }
                }
                g
            })
            .collect()
    }

    fn via_minors(m: &[Vec<i64>]) -> Vec<i64> {
        let dk = minor_gcds(m);
        let mut out = Vec::new();
        let mut prev = 1i64;
        for d in dk {
            if d == 0 {
                out.push(0);
                continue;
            }
            out.push(d / prev);
            prev = d;
        }
        out
    }

    #[test]
    fn triangle_groups_against_minors() {
        for d in 2..=30u64 {
            for n in 2..=30u64 {
                let p = Presentation::triangle(d, n, n);
                let m = relation_matrix(&p);
                assert_eq!(smith_normal_form(&m), via_minors(&m), "Δ({d},{n},{n})");
                let a = abelianization(&p);
                let g = d.gcd(&n);
                let expected: Vec<u64> = [g, n].into_iter().filter(|&x| x > 1).collect();
                assert_eq!(a.invariants, expected);
                assert_eq!(a.free_rank, 0);
            }
        }
    }

    proptest! {
        #[test]
        fn chain_and_determinant(m in prop::collection::vec(prop::collection::vec(-12i64..12, 3), 3)) {
            let d = smith_normal_form(&m);
            prop_assert_eq!(&d, &via_minors(&m));
            for w in d.windows(2) {
                if w[1] != 0 {
                    prop_assert_eq!(w[1] % w[0], 0);
                }
            }
            let det = minor_gcds(&m)[2];
            prop_assert_eq!(d.iter().product::<i64>(), det.abs());
        }

        #[test]
        fn rectangular(m in prop::collection::vec(prop::collection::vec(-9i64..9, 2), 1..5)) {
            prop_assert_eq!(smith_normal_form(&m), via_minors(&m));
        }
    }
}
