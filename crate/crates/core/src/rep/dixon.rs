//! Character table by simultaneous diagonalisation of the class matrices
//! over a prime field `F_p` with `p ≡ 1 (mod exponent)`, followed by an exact
//! lift of each value from its eigenvalue multiplicities.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclo::table::is_prime;
use crate::cyclo::CycNum;
use crate::grp::FiniteGroup;
use crate::modp::{inv_mod, nullspace, pow_mod, primitive_root, rref};

fn choose_prime(order: u64, exponent: u64) -> u64 {
    let mut p = exponent + 1;
    while !(is_prime(p) && p * p > 4 * order) {
        p += exponent;
    }
    p
}

/// Common eigenvectors of the class matrices, one per irreducible character.
fn split_eigenspaces(mats: &[Vec<Vec<u64>>], r: usize, p: u64) -> Vec<Vec<u64>> {
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| (0..r).map(|j| (i == j) as u64).collect())
        .collect()];
    for m in mats {
        let mut next = Vec::new();
        for w in spaces {
            if w.len() == 1 {
                next.push(w);
                continue;
            }
            let mut basis = w;
            let pivots = rref(&mut basis, p);
            let d = basis.len();
            // R[i][c] = coordinate i of M·b_c, read at the pivot positions
            let images: Vec<Vec<u64>> = basis.iter().map(|b| crate::modp::mat_vec(m, b, p)).collect();
            let rmat: Vec<Vec<u64>> =
                (0..d).map(|i| (0..d).map(|c| images[c][pivots[i]]).collect()).collect();
            let mut found = 0;
            for lambda in 0..p {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|j| if i == j { (rmat[i][j] + p - lambda) % p } else { rmat[i][j] })
                            .collect()
                    })
                    .collect();
                let ns = nullspace(&shifted, d, p);
                if ns.is_empty() {
                    continue;
                }
                found += ns.len();
                let sub: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|x| {
                        (0..r)
                            .map(|k| (0..d).fold(0, |acc, i| (acc + x[i] * basis[i][k]) % p))
                            .collect()
                    })
                    .collect();
                next.push(sub);
                if found == d {
                    break;
                }
            }
            assert_eq!(found, d, "class matrix not diagonalisable over F_{p}");
        }
        spaces = next;
    }
    assert!(spaces.iter().all(|w| w.len() == 1), "eigenspaces did not split");
    spaces.into_iter().map(|mut w| w.pop().unwrap()).collect()
}

pub(crate) fn character_table(g: &FiniteGroup) -> Vec<Vec<CycNum>> {
    let n = g.order() as u64;
    let r = g.num_classes();
    let e = g.exponent();
    let p = choose_prime(n, e);
    let reps = g.class_reps();
    let sizes = g.class_sizes();

    // mats[j][l][k] = #{x ∈ C_j : x⁻¹·g_k ∈ C_l}
    let mut mats = vec![vec![vec![0u64; r]; r]; r];
    for (k, &gk) in reps.iter().enumerate() {
        for (j, class) in g.classes().iter().enumerate() {
            for &x in class {
                let l = g.class_of(g.mul(g.inv(x), gk));
                mats[j][l][k] += 1;
            }
        }
    }
    for m in mats.iter_mut().flatten().flatten() {
        *m %= p;
    }

    let vecs = split_eigenspaces(&mats, r, p);
    let z = pow_mod(primitive_root(p), (p - 1) / e, p);
    let isqrt = (n as f64).sqrt() as u64 + 1;

    let mut table: Vec<Vec<CycNum>> = vecs
        .into_iter()
        .map(|w| {
            let w0 = inv_mod(w[0], p);
            let w: Vec<u64> = w.iter().map(|x| x * w0 % p).collect();
            let s = (0..r).fold(0, |acc, k| {
                let kstar = g.inverse_class(k);
                (acc + w[k] * w[kstar] % p * inv_mod(sizes[k] as u64 % p, p)) % p
            });
            let target = n % p * inv_mod(s, p) % p;
            let d = (1..=isqrt)
                .find(|d| d * d % p == target)
                .expect("degree squared is |G|/Σ");
            let modp: Vec<u64> = (0..r)
                .map(|k| d * w[k] % p * inv_mod(sizes[k] as u64 % p, p) % p)
                .collect();
            (0..r)
                .map(|k| {
                    let o = g.element_order(reps[k]) as u64;
                    let step = e / o;
                    let o_inv = inv_mod(o % p, p);
                    let sums: Vec<BigRational> = (0..o)
                        .map(|t| {
                            let mut acc = 0u64;
                            for s in 0..o {
                                let val = modp[g.power_class(k, s as i64)];
                                let expo = (o - (t * s) % o) % o * step;
                                acc = (acc + val * pow_mod(z, expo, p)) % p;
                            }
                            let m = acc * o_inv % p;
                            assert!(m <= d, "eigenvalue multiplicity out of range");
                            BigRational::from_integer(BigInt::from(m))
                        })
                        .collect();
                    CycNum::from_root_sums(o, sums)
                })
                .collect()
        })
        .collect();

    let trivial: Vec<CycNum> = vec![CycNum::one(); r];
    table.sort_by(|a, b| {
        let ka = (&a[0], *a != trivial, a);
        let kb = (&b[0], *b != trivial, b);
        ka.cmp(&kb)
    });
    table
}

#[cfg(test)]
mod tests {
    use crate::cyclo::CycNum;
    use crate::grp::named;
    use crate::rep::char_table;

    fn check_orthogonality(g: &crate::grp::Group) {
        let t = char_table(g);
        assert_eq!(t.len(), g.num_classes());
        let sum_sq: i64 = t
            .iter()
            .map(|c| {
                let d = c.degree_usize().unwrap() as i64;
                d * d
            })
            .sum();
        assert_eq!(sum_sq, g.order() as i64);
        for (i, a) in t.iter().enumerate() {
            for (j, b) in t.iter().enumerate() {
                let ip = a.inner(b).unwrap();
                assert_eq!(ip, CycNum::from((i == j) as i64));
            }
        }
        // column orthogonality: Σ_χ |χ(g)|² = |C_G(g)|
        for c in 0..g.num_classes() {
            let s: CycNum = t.iter().map(|x| &x.values()[c] * &x.values()[c].conj()).sum();
            assert_eq!(s, CycNum::from(g.centralizer_order(c) as i64));
        }
    }

    #[test]
    fn small_groups_are_orthonormal() {
        for g in [
            named::cyclic(2),
            named::cyclic(5),
            named::cyclic(12),
            named::s3(),
            named::dihedral(4),
            named::quaternion(),
            named::alternating(4),
            named::symmetric(4),
            named::dihedral(6),
            named::elementary_abelian_8(),
        ] {
            check_orthogonality(&g);
        }
    }

    #[test]
    fn s6_has_a_degree_sixteen_character() {
        let g = named::symmetric(6);
        let t = char_table(&g);
        assert_eq!(t.len(), 11);
        let degs: Vec<usize> = t.iter().map(|c| c.degree_usize().unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16]);
        check_orthogonality(&g);
    }

    #[test]
    fn c2_values() {
        let g = named::cyclic(2);
        let t = char_table(&g);
        assert_eq!(t[0].values(), &[CycNum::one(), CycNum::one()]);
        assert_eq!(t[1].values(), &[CycNum::one(), CycNum::from(-1)]);
    }
}
