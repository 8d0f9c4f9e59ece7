//! Seeded generators of valid graded rings and modules.
//!
//! Each `(seed, index)` pair owns its own ChaCha stream, so an instance can
//! be regenerated on its own.

use gradlab_core::graded::GradedSubgroup;
use gradlab_core::group::{Degree, FiniteGroup, Group};
use gradlab_core::module::{build as module_build, FiniteGradedModule};
use gradlab_core::monomial::MonomialGradedRing;
use gradlab_core::report::Caps;
use gradlab_core::ring::{build, FiniteGradedRing, GradedRing};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorParams {
    pub seed: u64,
    pub max_group_order: usize,
    pub primes: Vec<u64>,
    pub max_basis: usize,
    /// Relative weights of the ring families (a) to (f).
    pub weights: [u32; 6],
    pub max_ring_order: u128,
    pub max_module_order: u128,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        GeneratorParams {
            seed: 0,
            max_group_order: 8,
            primes: vec![2, 3],
            max_basis: 9,
            weights: [2, 4, 2, 2, 1, 1],
            max_ring_order: 4096,
            max_module_order: 1296,
        }
    }
}

impl GeneratorParams {
    pub fn with_seed(seed: u64) -> Self {
        GeneratorParams { seed, ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    GroupAlgebra,
    GoodMatrix,
    Quadratic,
    Monomial,
    Trivial,
    DirectSum,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::GroupAlgebra, Family::GoodMatrix, Family::Quadratic, Family::Monomial, Family::Trivial, Family::DirectSum];

    pub fn label(self) -> &'static str {
        match self {
            Family::GroupAlgebra => "group_algebra",
            Family::GoodMatrix => "good_matrix",
            Family::Quadratic => "quadratic",
            Family::Monomial => "monomial",
            Family::Trivial => "trivial",
            Family::DirectSum => "direct_sum",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedRing {
    pub family: Family,
    pub description: String,
    pub ring: GradedRing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedModule {
    pub description: String,
    pub module: FiniteGradedModule,
}

fn stream(seed: u64, index: u64, salt: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_mul(2).wrapping_add(salt));
    rng
}

fn pick_prime(rng: &mut ChaCha8Rng, p: &GeneratorParams) -> u64 {
    *p.primes.choose(rng).unwrap_or(&2)
}

fn random_group(rng: &mut ChaCha8Rng, max_order: usize, allow_integers: bool) -> Group {
    let mut options: Vec<Group> = (1..=max_order).filter_map(|n| Group::cyclic(n).ok()).collect();
    for n in 3..=max_order / 2 {
        options.extend(Group::dihedral(n).ok());
    }
    if allow_integers {
        options.push(Group::Integers);
        options.push(Group::Integers);
    }
    options.choose(rng).cloned().unwrap_or(Group::Integers)
}

fn random_element(rng: &mut ChaCha8Rng, g: &Group) -> Degree {
    match g.order() {
        Some(n) => rng.gen_range(0..n as Degree),
        None => rng.gen_range(-2..=2),
    }
}

/// Elements of order dividing two.
fn involutions(g: &Group) -> Vec<Degree> {
    match g.elements() {
        Some(els) => els.into_iter().filter(|&x| g.op(x, x) == g.identity()).collect(),
        None => vec![0],
    }
}

fn weighted_family(rng: &mut ChaCha8Rng, w: &[u32; 6]) -> Family {
    let total: u32 = w.iter().sum();
    if total == 0 {
        return Family::Trivial;
    }
    let mut t = rng.gen_range(0..total);
    for (f, &wi) in Family::ALL.iter().zip(w) {
        if t < wi {
            return *f;
        }
        t -= wi;
    }
    Family::Trivial
}

fn matrix(rng: &mut ChaCha8Rng, p: &GeneratorParams, group: Group) -> Option<(FiniteGradedRing, String)> {
    let n: usize = if rng.gen_bool(0.5) { 2 } else { 3 };
    let q = pick_prime(rng, p);
    let degrees: Vec<Degree> = (0..n).map(|_| random_element(rng, &group)).collect();
    // A preorder by levels keeps the kept units closed under multiplication.
    let levels: Vec<usize> = if rng.gen_bool(0.5) { vec![0; n] } else { (0..n).map(|_| rng.gen_range(0..n)).collect() };
    let labels: Vec<String> = degrees.iter().map(|&d| group.label(d)).collect();
    let desc = format!("M_{n}(GF({q})) over {}, d=({}), levels {:?}", group_name(&group), labels.join(","), levels);
    let r = build::matrix_subring(group, q, &degrees, |i, j| levels[i] <= levels[j]).ok()?;
    Some((r, desc))
}

pub fn group_name(g: &Group) -> String {
    use gradlab_core::group::GroupKind;
    match g {
        Group::Integers => "Z".into(),
        Group::Finite(f) => match f.kind() {
            GroupKind::Cyclic(n) => format!("Z_{n}"),
            GroupKind::Dihedral(n) => format!("D_{}", 2 * n),
            _ => format!("G({})", f.order()),
        },
    }
}

fn group_algebra(rng: &mut ChaCha8Rng, p: &GeneratorParams) -> Option<(FiniteGradedRing, String)> {
    let q = pick_prime(rng, p);
    if rng.gen_bool(0.6) {
        let n = rng.gen_range(2..=p.max_group_order.max(2));
        let divisors: Vec<usize> = (1..=n).filter(|m| n % m == 0).collect();
        let m = *divisors.choose(rng)?;
        let h = FiniteGroup::cyclic(n).ok()?;
        let r = build::group_algebra(&h, q, Group::cyclic(m).ok()?, |x| (x % m) as Degree).ok()?;
        Some((r, format!("GF({q})[Z_{n}] graded by Z_{m}")))
    } else {
        let n = rng.gen_range(3..=4);
        let h = FiniteGroup::dihedral(n).ok()?;
        let r = build::group_algebra(&h, q, Group::cyclic(2).ok()?, |x| (x / n) as Degree).ok()?;
        Some((r, format!("GF({q})[D_{}] graded by Z_2", 2 * n)))
    }
}

fn quadratic(rng: &mut ChaCha8Rng, p: &GeneratorParams) -> Option<(FiniteGradedRing, String)> {
    let group = random_group(rng, p.max_group_order, false);
    let inv: Vec<Degree> = involutions(&group).into_iter().filter(|&x| x != group.identity()).collect();
    let h = *inv.choose(rng)?;
    let n = rng.gen_range(2..=12u64);
    let c = rng.gen_range(0..n);
    let r = build::quadratic(group.clone(), n, c, h, ("1", "x")).ok()?;
    Some((r, format!("Z_{n}[x]/(x^2-{c}) over {}, deg x={}", group_name(&group), group.label(h))))
}

fn monomial(rng: &mut ChaCha8Rng, p: &GeneratorParams) -> Option<(GradedRing, String)> {
    let group = random_group(rng, p.max_group_order, true);
    let q = pick_prime(rng, p);
    let gamma = match group {
        Group::Integers => rng.gen_range(-3..=3),
        _ => random_element(rng, &group),
    };
    let r = MonomialGradedRing::new(q, group.clone(), gamma).ok()?;
    Some((r.into(), format!("GF({q})[x] over {}, deg x={}", group_name(&group), group.label(gamma))))
}

fn trivial(rng: &mut ChaCha8Rng, p: &GeneratorParams) -> Option<(FiniteGradedRing, String)> {
    let group = random_group(rng, p.max_group_order, true);
    let e = group.identity();
    match rng.gen_range(0..3) {
        0 => {
            let n = rng.gen_range(2..=36u64);
            let r = build::trivial_cyclic(group.clone(), n).ok()?;
            Some((r, format!("Z_{n} trivially graded by {}", group_name(&group))))
        }
        1 => {
            let q = pick_prime(rng, p);
            let r = build::matrix_ring(group.clone(), q, &[e, e]).ok()?;
            Some((r, format!("M_2(GF({q})) trivially graded by {}", group_name(&group))))
        }
        _ => {
            let n = rng.gen_range(2..=12u64);
            let c = rng.gen_range(0..n);
            let r = build::quadratic(group.clone(), n, c, e, ("1", "x")).ok()?;
            Some((r, format!("Z_{n}[x]/(x^2-{c}) trivially graded by {}", group_name(&group))))
        }
    }
}

fn direct_sum(rng: &mut ChaCha8Rng, p: &GeneratorParams) -> Option<(FiniteGradedRing, String)> {
    let group = random_group(rng, p.max_group_order, true);
    let degrees: Vec<Degree> = (0..2).map(|_| random_element(rng, &group)).collect();
    let a = build::matrix_ring(group.clone(), 2, &degrees).ok()?;
    let n = rng.gen_range(2..=6u64);
    let b = if rng.gen_bool(0.5) {
        build::trivial_cyclic(group.clone(), n).ok()?
    } else {
        let d2: Vec<Degree> = (0..2).map(|_| random_element(rng, &group)).collect();
        build::matrix_ring(group.clone(), 2, &d2).ok()?
    };
    let r = build::direct_sum(&a, &b).ok()?;
    Some((r, format!("M_2(GF(2)) + ring of order {} over {}", b.order(), group_name(&group))))
}

/// The `index`-th ring of the stream. Retries inside the same stream until a
/// candidate fits the size limits; falls back to a trivial grading.
pub fn generate_graded_ring(p: &GeneratorParams, index: u64) -> GeneratedRing {
    let mut rng = stream(p.seed, index, 0);
    for _ in 0..32 {
        let family = weighted_family(&mut rng, &p.weights);
        let made: Option<(GradedRing, String)> = match family {
            Family::GroupAlgebra => group_algebra(&mut rng, p).map(|(r, d)| (r.into(), d)),
            Family::GoodMatrix => {
                let g = random_group(&mut rng, p.max_group_order, true);
                matrix(&mut rng, p, g).map(|(r, d)| (r.into(), d))
            }
            Family::Quadratic => quadratic(&mut rng, p).map(|(r, d)| (r.into(), d)),
            Family::Monomial => monomial(&mut rng, p),
            Family::Trivial => trivial(&mut rng, p).map(|(r, d)| (r.into(), d)),
            Family::DirectSum => direct_sum(&mut rng, p).map(|(r, d)| (r.into(), d)),
        };
        if let Some((ring, description)) = made {
            let fits = match &ring {
                GradedRing::Finite(f) => f.order() <= p.max_ring_order && f.len() <= p.max_basis,
                GradedRing::Monomial(_) => true,
            };
            if fits {
                return GeneratedRing { family, description, ring };
            }
        }
    }
    let ring = build::trivial_cyclic(Group::cyclic(2).expect("small"), 2).expect("valid");
    GeneratedRing { family: Family::Trivial, description: "Z_2 trivially graded by Z_2".into(), ring: ring.into() }
}

fn small_finite_ring(rng: &mut ChaCha8Rng, p: &GeneratorParams) -> Option<(FiniteGradedRing, String)> {
    let limit = 256;
    for _ in 0..16 {
        let made = match rng.gen_range(0..4) {
            0 => group_algebra(rng, p),
            1 => quadratic(rng, p),
            2 => trivial(rng, p),
            _ => {
                let g = random_group(rng, p.max_group_order, true);
                matrix(rng, p, g)
            }
        };
        if let Some((r, d)) = made {
            if r.order() <= limit {
                return Some((r, d));
            }
        }
    }
    None
}

fn base_module(rng: &mut ChaCha8Rng, p: &GeneratorParams) -> Option<(FiniteGradedModule, String)> {
    match rng.gen_range(0..3) {
        0 => {
            let (r, d) = small_finite_ring(rng, p)?;
            Some((FiniteGradedModule::regular(&r), format!("regular module over {d}")))
        }
        1 => {
            let group = random_group(rng, p.max_group_order, true);
            let q = if rng.gen_bool(0.7) { 2 } else { 3 };
            let n = 2;
            let degrees: Vec<Degree> = (0..n).map(|_| random_element(rng, &group)).collect();
            let shift = random_element(rng, &group);
            let r = build::matrix_ring(group.clone(), q, &degrees).ok()?;
            let m = module_build::column_module(&r, q, n, &degrees, shift).ok()?;
            let labels: Vec<String> = degrees.iter().map(|&x| group.label(x)).collect();
            Some((m, format!("GF({q})^2 over M_2 on {}, d=({}), shift {}", group_name(&group), labels.join(","), group.label(shift))))
        }
        _ => {
            let n = rng.gen_range(2..=36u64);
            Some((module_build::gaussian_pair(n).ok()?, format!("Z_{n}[i] over Z_{n}")))
        }
    }
}

/// The `index`-th module: a base module, sometimes replaced by a quotient or
/// a restriction to a random graded submodule.
pub fn generate_graded_module(p: &GeneratorParams, index: u64) -> GeneratedModule {
    let mut rng = stream(p.seed, index, 1);
    let caps = Caps { elements: 20_000, lattice: 400 };
    for _ in 0..32 {
        let Some((m, d)) = base_module(&mut rng, p) else { continue };
        if m.order() > p.max_module_order {
            continue;
        }
        let Ok(lattice) = m.enumerate_graded_submodules(&caps) else { continue };
        let choice = rng.gen_range(0..4);
        let (module, description) = if choice >= 2 || lattice.len() < 3 {
            (m, d)
        } else {
            let inner: Vec<&GradedSubgroup> = lattice.iter().filter(|s| !s.is_zero() && !s.is_full()).collect();
            let Some(&k) = inner.choose(&mut rng) else { continue };
            let label = k.render(m.basis());
            if choice == 0 {
                match m.quotient(k) {
                    Ok(q) => (q.module, format!("({d}) / {label}")),
                    Err(_) => continue,
                }
            } else {
                match m.restrict(k) {
                    Ok(r) => (r.module, format!("{label} inside ({d})")),
                    Err(_) => continue,
                }
            }
        };
        if module.is_zero_module() || !module.validate().is_empty() {
            continue;
        }
        return GeneratedModule { description, module };
    }
    GeneratedModule {
        description: "Z_2[i] over Z_2".into(),
        module: module_build::gaussian_pair(2).expect("valid"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_and_index_give_the_same_ring() {
        let p = GeneratorParams::with_seed(7);
        for i in 0..20 {
            assert_eq!(generate_graded_ring(&p, i), generate_graded_ring(&p, i));
        }
    }

    #[test]
    fn generated_rings_validate() {
        let p = GeneratorParams::with_seed(1);
        for i in 0..60 {
            let g = generate_graded_ring(&p, i);
            if let GradedRing::Finite(f) = &g.ring {
                assert!(f.validate().is_empty(), "{}", g.description);
            }
        }
    }

    #[test]
    fn generated_modules_validate() {
        let p = GeneratorParams::with_seed(3);
        for i in 0..15 {
            let g = generate_graded_module(&p, i);
            assert!(g.module.validate().is_empty(), "{}", g.description);
        }
    }

    #[test]
    fn good_grading_reproduces_the_z4_matrix_fixture() {
        let r = build::matrix_ring(Group::cyclic(4).unwrap(), 2, &[0, 2]).unwrap();
        let f = gradlab_core::fixtures::build_fixture("m2_z4").unwrap();
        assert_eq!(GradedRing::Finite(r), *f.ring().unwrap());
    }

    #[test]
    fn quadratic_family_reproduces_z6i() {
        let r = build::quadratic(Group::cyclic(2).unwrap(), 6, 5, 1, ("1", "i")).unwrap();
        let f = gradlab_core::fixtures::build_fixture("z6i").unwrap();
        assert_eq!(GradedRing::Finite(r), *f.ring().unwrap());
    }

    #[test]
    fn pair_family_reproduces_z36i() {
        let f = gradlab_core::fixtures::build_fixture("z36i").unwrap();
        assert_eq!(module_build::gaussian_pair(36).unwrap(), *f.module().unwrap());
    }
}
