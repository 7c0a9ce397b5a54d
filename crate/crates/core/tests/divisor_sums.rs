use gf2bup::factor::PrimePower;
use gf2bup::sigma::{
    enumerate_divisors, gcd_unitary, is_bup, is_perfect, is_unitary_perfect, sigma, sigma_bistar,
    sigma_bistar_oracle, sigma_bistar_prime_power, sigma_prime_power, sigma_star, DivisorKind,
};
use gf2bup::Poly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

fn deg(a: u64) -> u32 {
    63 - a.leading_zeros()
}

fn mul(a: u64, b: u64) -> u64 {
    (0..64).filter(|i| b >> i & 1 == 1).fold(0, |acc, i| acc ^ (a << i))
}

fn divrem(mut a: u64, b: u64) -> (u64, u64) {
    let mut q = 0;
    while a != 0 && deg(a) >= deg(b) {
        let s = deg(a) - deg(b);
        q |= 1 << s;
        a ^= b << s;
    }
    (q, a)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, divrem(a, b).1);
    }
    a
}

/// Brute-force divisor sums straight from the definitions: every mask is a
/// candidate divisor, unitary means gcd(d, s/d) = 1, and bi-unitary means
/// the largest common unitary divisor of d and s/d is 1.
struct Brute {
    divisors: Vec<u64>,
    s: u64,
}

impl Brute {
    fn new(s: u64) -> Brute {
        let divisors = (1..=s).filter(|&d| deg(d) <= deg(s) && divrem(s, d).1 == 0).collect();
        Brute { divisors, s }
    }

    fn unitary_in(&self, n: u64) -> Vec<u64> {
        self.divisors
            .iter()
            .copied()
            .filter(|&d| {
                let (q, r) = divrem(n, d);
                r == 0 && gcd(d, q) == 1
            })
            .collect()
    }

    fn gcd_u(&self, a: u64, b: u64) -> u64 {
        let ua = self.unitary_in(a);
        self.unitary_in(b).into_iter().filter(|d| ua.contains(d)).max_by_key(|&d| deg(d)).unwrap()
    }

    fn sigma(&self) -> u64 {
        self.divisors.iter().fold(0, |acc, d| acc ^ d)
    }

    fn sigma_star(&self) -> u64 {
        self.unitary_in(self.s).iter().fold(0, |acc, d| acc ^ d)
    }

    fn sigma_bistar(&self) -> u64 {
        self.divisors.iter().filter(|&&d| self.gcd_u(d, divrem(self.s, d).0) == 1).fold(0, |acc, d| acc ^ d)
    }
}

#[test]
fn all_three_sums_match_brute_force_up_to_degree_10() {
    for s in 2u64..1 << 11 {
        let b = Brute::new(s);
        let poly = Poly::from_mask(s);
        assert_eq!(sigma(&poly).unwrap(), Poly::from_mask(b.sigma()), "sigma {s:#x}");
        assert_eq!(sigma_star(&poly).unwrap(), Poly::from_mask(b.sigma_star()), "sigma* {s:#x}");
        assert_eq!(sigma_bistar(&poly).unwrap(), Poly::from_mask(b.sigma_bistar()), "sigma** {s:#x}");
        assert_eq!(sigma_bistar_oracle(&poly).unwrap(), Poly::from_mask(b.sigma_bistar()), "oracle {s:#x}");
    }
}

#[test]
fn divisor_lists_match_brute_force() {
    for s in [0x3b8u64, 0x6, 0x1f, 0x2a5, 0x100] {
        let b = Brute::new(s);
        let poly = Poly::from_mask(s);
        let mut all: Vec<u64> = enumerate_divisors(&poly, DivisorKind::All)
            .unwrap()
            .iter()
            .map(|d| d.to_u64().unwrap())
            .collect();
        all.sort();
        assert_eq!(all, b.divisors);
        let mut unitary: Vec<u64> = enumerate_divisors(&poly, DivisorKind::Unitary)
            .unwrap()
            .iter()
            .map(|d| d.to_u64().unwrap())
            .collect();
        unitary.sort();
        assert_eq!(unitary, b.unitary_in(s));
    }
}

#[test]
fn unitary_gcd_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let a = rng.gen_range(2u64..1 << 8);
        let c = rng.gen_range(2u64..1 << 5);
        let s = mul(a, c);
        let b = Brute::new(s);
        let got = gcd_unitary(&Poly::from_mask(s), &Poly::from_mask(a)).unwrap();
        assert_eq!(got, Poly::from_mask(b.gcd_u(s, a)), "gcd_u({s:#x}, {a:#x})");
    }
}

#[test]
fn multiplicative_on_coprime_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tested = 0;
    while tested < 500 {
        let s = Poly::from_mask(rng.gen_range(2u64..1 << 21));
        let t = Poly::from_mask(rng.gen_range(2u64..1 << 21));
        if !s.gcd(&t).unwrap().is_one() {
            continue;
        }
        let st = s.mul(&t);
        assert_eq!(sigma(&st).unwrap(), sigma(&s).unwrap().mul(&sigma(&t).unwrap()));
        assert_eq!(sigma_star(&st).unwrap(), sigma_star(&s).unwrap().mul(&sigma_star(&t).unwrap()));
        assert_eq!(sigma_bistar(&st).unwrap(), sigma_bistar(&s).unwrap().mul(&sigma_bistar(&t).unwrap()));
        tested += 1;
    }
}

#[test]
fn even_and_odd_prime_power_rules() {
    // σ**(T^2n) = (1+T) σ(T^n) σ(T^(n-1)) and σ**(T^(2n+1)) = σ(T^(2n+1))
    for t in [Poly::x(), Poly::x_plus_one(), p("x^2+x+1"), p("x^4+x+1")] {
        let one_plus_t = &t + &Poly::one();
        for n in 1..=20u32 {
            let even = sigma_bistar_prime_power(&PrimePower::new(t.clone(), 2 * n));
            let rhs = one_plus_t
                .mul(&sigma_prime_power(&PrimePower::new(t.clone(), n)))
                .mul(&sigma_prime_power(&PrimePower::new(t.clone(), n - 1)));
            assert_eq!(even, rhs);
            let odd = sigma_bistar_prime_power(&PrimePower::new(t.clone(), 2 * n + 1));
            assert_eq!(odd, sigma_prime_power(&PrimePower::new(t.clone(), 2 * n + 1)));
        }
    }
}

#[test]
fn documented_values() {
    assert_eq!(sigma_bistar(&p("x^2")).unwrap(), p("(x+1)^2"));
    assert_eq!(sigma_bistar(&p("x^6")).unwrap(), p("(1+x)^4*(x^2+x+1)"));
    assert_eq!(sigma_bistar(&Poly::x()).unwrap(), Poly::x_plus_one());
    assert!(is_bup(&p("x^2*(x+1)^2")));
    assert!(is_bup(&p("x*(x+1)")));
    assert!(!is_bup(&Poly::x()));
    assert!(is_perfect(&p("x*(x+1)")));
    assert!(is_unitary_perfect(&p("x*(x+1)")));
    assert!(!is_perfect(&p("x^2")));
    assert!(sigma(&Poly::zero()).is_err());
}

#[test]
fn every_bup_is_divisible_by_x_and_x_plus_one() {
    for s in 2u64..1 << 14 {
        let poly = Poly::from_mask(s);
        if is_bup(&poly) {
            assert_eq!(s & 1, 0);
            assert!(!poly.eval_at_one());
            assert!(is_bup(&poly.translate()));
        }
    }
}
