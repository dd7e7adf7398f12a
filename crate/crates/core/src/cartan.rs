//! Generalized Cartan matrices and the standard presets.

use num_rational::Ratio;

use crate::error::{Error, Result};

/// An integer matrix with 2s on the diagonal, non-positive off-diagonal
/// entries, and a symmetric zero pattern. Defines a Kac-Moody algebra; this
/// crate uses only its Weyl group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralizedCartanMatrix {
    entries: Vec<Vec<i64>>,
    symmetrizable: bool,
}

impl GeneralizedCartanMatrix {
    /// Validates the defining conditions and computes the symmetrizable flag.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::MalformedCartan("rank must be positive".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedCartan(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(Error::MalformedCartan(format!(
                    "diagonal entry a_{i}{i} = {} (must be 2)",
                    entries[i][i]
                )));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(Error::MalformedCartan(format!(
                        "off-diagonal entry a_{i}{j} = {} (must be <= 0)",
                        entries[i][j]
                    )));
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::MalformedCartan(format!(
                        "zero pattern not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let symmetrizable = is_symmetrizable(&entries);
        Ok(GeneralizedCartanMatrix { entries, symmetrizable })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// True iff some positive diagonal D makes D*A symmetric.
    pub fn is_symmetrizable(&self) -> bool {
        self.symmetrizable
    }
}

/// Decides symmetrizability by propagating the diagonal ratios
/// d_j / d_i = a_ij / a_ji along edges of the Coxeter graph and checking
/// consistency around cycles. Positivity is automatic because both
/// off-diagonal entries on an edge are negative.
fn is_symmetrizable(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // want d_i * a_ij = d_j * a_ji
                let dj = di * Ratio::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(existing) => {
                        if existing != dj {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Returns the GCM for a named preset, or `None` for unknown names.
///
/// Presets: `An`, `Bn`, `Cn` (n >= 1 resp. 2), `Dn` (n >= 3), `G2`,
/// and the affine types `A1~`, `A2~`.
pub fn preset(name: &str) -> Option<GeneralizedCartanMatrix> {
    let chain = |n: usize| -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    let entries: Vec<Vec<i64>> = match name {
        "G2" => vec![vec![2, -1], vec![-3, 2]],
        "A1~" => vec![vec![2, -2], vec![-2, 2]],
        "A2~" => vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
        _ => {
            let (family, num) = name.split_at(1);
            let n: usize = num.parse().ok()?;
            match family {
                "A" if n >= 1 => chain(n),
                "B" if n >= 2 => {
                    let mut a = chain(n);
                    a[n - 2][n - 1] = -2;
                    a
                }
                "C" if n >= 2 => {
                    let mut a = chain(n);
                    a[n - 1][n - 2] = -2;
                    a
                }
                "D" if n >= 3 => {
                    let mut a = chain(n - 1);
                    for row in &mut a {
                        row.push(0);
                    }
                    a.push(vec![0; n]);
                    a[n - 1][n - 1] = 2;
                    // fork: last node attaches to node n-3 instead of n-2
                    a[n - 3][n - 1] = -1;
                    a[n - 1][n - 3] = -1;
                    a
                }
                _ => return None,
            }
        }
    };
    Some(GeneralizedCartanMatrix::new(entries).expect("presets are valid GCMs"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_valid() {
        for name in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "A1~", "A2~"] {
            let gcm = preset(name).unwrap();
            assert!(gcm.is_symmetrizable(), "{name} should be symmetrizable");
        }
        assert!(preset("E8").is_none());
        assert!(preset("B1").is_none());
        assert!(preset("bogus").is_none());
    }

    #[test]
    fn preset_shapes() {
        assert_eq!(preset("A2").unwrap().entries(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(preset("B2").unwrap().entries(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(preset("A1~").unwrap().entries(), &[vec![2, -2], vec![-2, 2]]);
        let d4 = preset("D4").unwrap();
        assert_eq!(d4.entry(1, 3), -1);
        assert_eq!(d4.entry(2, 3), 0);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(
            GeneralizedCartanMatrix::new(vec![vec![3, -1], vec![-1, 2]]),
            Err(Error::MalformedCartan(_))
        ));
        assert!(matches!(
            GeneralizedCartanMatrix::new(vec![vec![2, 1], vec![-1, 2]]),
            Err(Error::MalformedCartan(_))
        ));
        // zero pattern must be symmetric
        assert!(matches!(
            GeneralizedCartanMatrix::new(vec![vec![2, 0], vec![-1, 2]]),
            Err(Error::MalformedCartan(_))
        ));
        assert!(matches!(
            GeneralizedCartanMatrix::new(vec![vec![2, -1]]),
            Err(Error::MalformedCartan(_))
        ));
    }

    #[test]
    fn symmetrizable_detection() {
        // B2 is symmetrizable with D = diag(1, 2)
        assert!(preset("B2").unwrap().is_symmetrizable());
        // Rank-3 cycle with asymmetric weights around it is not symmetrizable:
        // ratios 2, 1, 1 around the triangle do not multiply to 1.
        let bad = GeneralizedCartanMatrix::new(vec![
            vec![2, -2, -1],
            vec![-1, 2, -1],
            vec![-1, -1, 2],
        ])
        .unwrap();
        assert!(!bad.is_symmetrizable());
    }
}
