use crate::error::{Error, Result};
use crate::qubo::QuboModel;
use crate::reformulate::{squared_residual, ConstraintSystem, EncodingMap};

fn encoded_residual(a: &[Vec<i64>], b: &[i64], e: &EncodingMap) -> Result<QuboModel> {
    for row in a {
        Error::check_len(e.num_vars(), row.len())?;
    }
    let em = e.matrix();
    let ae: Vec<Vec<i64>> = a
        .iter()
        .map(|row| {
            (0..e.num_bits())
                .map(|k| row.iter().zip(&em).map(|(x, er)| x * er[k]).sum())
                .collect()
        })
        .collect();
    let shifted: Vec<i64> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| bi - row.iter().zip(e.shifts()).map(|(x, l)| x * l).sum::<i64>())
        .collect();
    squared_residual(&ae, &shifted, e.num_bits())
}

/// QUBO over the bits of `e` whose energy is `‖A (L + E X)‖²`.
///
/// The quadratic part is `Eᵀ Q_I E + 2 diag(Lᵀ Q_I E)` with `Q_I = AᵀA`; the
/// offset is `Lᵀ Q_I L`. Zero-energy patterns decode to kernel vectors.
pub fn kernel_qubo(a: &[Vec<i64>], e: &EncodingMap) -> Result<QuboModel> {
    encoded_residual(a, &vec![0; a.len()], e)
}

/// QUBO over the bits of `e` whose energy is `‖A (L + E X) - b‖²`.
pub fn seed_qubo(ip: &ConstraintSystem, e: &EncodingMap) -> Result<QuboModel> {
    if ip.has_inequalities() {
        return Err(Error::Precondition("seed QUBO needs an equality system".into()));
    }
    encoded_residual(ip.matrix(), ip.rhs(), e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;
    use crate::qubo::brute_force;
    use crate::reformulate::Scheme;
    use proptest::prelude::*;

    fn bits(n: usize) -> impl Iterator<Item = Vec<u8>> {
        (0u32..1 << n).map(move |k| (0..n).map(|i| ((k >> i) & 1) as u8).collect())
    }

    fn norm2(a: &[Vec<i64>], x: &[i64], b: &[i64]) -> i64 {
        a.iter()
            .zip(b)
            .map(|(r, bi)| {
                let v = r.iter().zip(x).map(|(p, q)| p * q).sum::<i64>() - bi;
                v * v
            })
            .sum()
    }

    #[test]
    fn walk_through_matrix() {
        let a = vec![vec![1, 2, 1]];
        let e = EncodingMap::new(&[-1; 3], &[2; 3], Scheme::Binary).unwrap();
        let q = kernel_qubo(&a, &e).unwrap();
        let expected = [
            [-7, 2, 2, 4, 1, 2],
            [2, -12, 4, 8, 2, 4],
            [2, 4, -12, 8, 2, 4],
            [4, 8, 8, -16, 4, 8],
            [1, 2, 2, 4, -7, 2],
            [2, 4, 4, 8, 2, -12],
        ];
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(q.entry(i, j), rational(expected[i][j]), "({i}, {j})");
            }
        }
        // Lᵀ Q_I L = (1 + 2 + 1)²
        assert_eq!(q.offset(), &rational(16));
        for x in bits(6) {
            let v = e.decode(&x).unwrap();
            assert_eq!(q.energy(&x).unwrap(), rational(norm2(&a, &v, &[0])));
        }
    }

    #[test]
    fn identity_kernel_is_trivial() {
        let a = vec![vec![1, 0], vec![0, 1]];
        let e = EncodingMap::new(&[-2; 2], &[1; 2], Scheme::Binary).unwrap();
        let en = brute_force(&kernel_qubo(&a, &e).unwrap(), None).unwrap();
        assert_eq!(en.energy, rational(0));
        assert_eq!(en.argmins.len(), 1);
        assert_eq!(e.decode(&en.argmins[0]).unwrap(), vec![0, 0]);
    }

    #[test]
    fn seed_examples() {
        let ip = ConstraintSystem::boxed(vec![vec![1, 1]], vec![2], vec![0, 0], vec![2, 2]).unwrap();
        let e = EncodingMap::new(&[0, 0], &[2, 2], Scheme::Binary).unwrap();
        let q = seed_qubo(&ip, &e).unwrap();
        let mut feasible: Vec<Vec<i64>> = bits(e.num_bits())
            .filter(|x| q.energy(x).unwrap() == rational(0))
            .map(|x| e.decode(&x).unwrap())
            .collect();
        feasible.sort();
        feasible.dedup();
        assert_eq!(feasible, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);

        let zero_rhs = ConstraintSystem::boxed(vec![vec![1, 2, 1]], vec![0], vec![-1; 3], vec![2; 3]).unwrap();
        let e = EncodingMap::new(&[-1; 3], &[2; 3], Scheme::Binary).unwrap();
        assert_eq!(seed_qubo(&zero_rhs, &e).unwrap(), kernel_qubo(zero_rhs.matrix(), &e).unwrap());
    }

    #[test]
    fn problem_one_zero_residual_set() {
        let ip = crate::reformulate::problem_one();
        let (l, u) = ip.finite_bounds().unwrap();
        let e = EncodingMap::new(&l, &u, Scheme::Binary).unwrap();
        let q = seed_qubo(&ip, &e).unwrap();
        let zero: Vec<Vec<i64>> = bits(11)
            .filter(|x| q.energy(x).unwrap() == rational(0))
            .map(|x| e.decode(&x).unwrap())
            .collect();
        let all: Vec<Vec<i64>> = bits(11)
            .map(|x| x.iter().map(|&v| i64::from(v)).collect::<Vec<_>>())
            .filter(|x| ip.is_feasible(x))
            .collect();
        let mut zero_sorted = zero.clone();
        zero_sorted.sort();
        let mut all_sorted = all;
        all_sorted.sort();
        assert_eq!(zero_sorted, all_sorted);
        assert_eq!(zero_sorted.len(), 9);
    }

    #[test]
    fn random_kernel_minimizers_are_kernel_vectors() {
        let mut rng = crate::anneal::shot_rng(5, 0);
        use rand::Rng;
        for _ in 0..10 {
            let a: Vec<Vec<i64>> = (0..2).map(|_| (0..4).map(|_| rng.gen_range(-2..=2)).collect()).collect();
            let e = EncodingMap::new(&[-1; 4], &[1; 4], Scheme::Binary).unwrap();
            let q = kernel_qubo(&a, &e).unwrap();
            for x in bits(8) {
                let v = e.decode(&x).unwrap();
                let zero = q.energy(&x).unwrap() == rational(0);
                assert_eq!(zero, crate::graver::in_kernel(&a, &v));
            }
        }
    }

    proptest! {
        #[test]
        fn energy_identity(
            a in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..3),
            b in prop::collection::vec(-4i64..=4, 2),
            lo in prop::collection::vec(-3i64..=0, 3),
            span in prop::collection::vec(0i64..=5, 3),
            mu in 1u64..4,
            pick in 0usize..3,
        ) {
            let b = b[..a.len()].to_vec();
            let up: Vec<i64> = lo.iter().zip(&span).map(|(l, s)| l + s).collect();
            let scheme = [Scheme::Binary, Scheme::Unary, Scheme::Bounded(mu)][pick];
            let e = EncodingMap::new(&lo, &up, scheme).unwrap();
            let ip = ConstraintSystem::boxed(a.clone(), b.clone(), lo.clone(), up).unwrap();
            let q = seed_qubo(&ip, &e).unwrap();
            for x in bits(e.num_bits()).take(256) {
                let v = e.decode(&x).unwrap();
                prop_assert_eq!(q.energy(&x).unwrap(), rational(norm2(&a, &v, &b)));
            }
        }
    }
}
