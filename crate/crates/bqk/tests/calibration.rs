//! Search that justifies the frozen corner-role convention and weight
//! rule. Run with `cargo test --test calibration -- --ignored --nocapture`.
//!
//! Enumerates every assignment of crossing corners to the relation roles
//! (star_in, dot_left, dot_right, star_out) per sign, together with every
//! weight rule (term sign, star argument, dot order) per sign, and
//! filters by:
//!
//!   1. counting invariance under R1/R2 perturbations for the order-2
//!      affine biquasile and all 72 order-3 biquasiles,
//!   2. the published enhanced-polynomial values on the Hopf link fixture,
//!   3. enhanced-polynomial invariance under the same perturbations,
//!   4. invariance for linear weights on asymmetric affine biquasiles,
//!   5. the published per-coloring weight triples on the Hopf link.
//!
//! Twenty-four candidates survive, related by symmetries the published
//! data cannot observe (simultaneous star-direction reversal, simultaneous
//! or negative-side dot transposition). The library freezes the first
//! survivor: the role tables in `ROLE_CONVENTION` with the weight rule
//! `-phi(x,a,b)` at positive and `+phi(x,a,b)` at negative crossings.

mod common;

use bqk::biquasile::Biquasile;
use bqk::boltzmann::{BoltzmannWeight, EnhancedPolynomial};
use bqk::coloring::{count_colorings, enumerate_colorings};
use bqk::diagram::{LinkDiagram, ReidemeisterMove, RoleConvention, ROLE_CONVENTION};
use common::{affine_order2, weight};

#[derive(Clone, Copy, Debug, PartialEq)]
struct WRule {
    negate: bool,
    use_out: bool,
    swap_dots: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct FullConv {
    roles: RoleConvention,
    wpos: WRule,
    wneg: WRule,
}

fn role_options() -> Vec<[usize; 4]> {
    let mut v = Vec::new();
    for (star, dot) in [((0usize, 2usize), (1usize, 3usize)), ((1, 3), (0, 2))] {
        for (si, so) in [(star.0, star.1), (star.1, star.0)] {
            for (dl, dr) in [(dot.0, dot.1), (dot.1, dot.0)] {
                v.push([si, dl, dr, so]);
            }
        }
    }
    v
}

fn wrules() -> Vec<WRule> {
    let mut v = Vec::new();
    for negate in [false, true] {
        for use_out in [false, true] {
            for swap_dots in [false, true] {
                v.push(WRule { negate, use_out, swap_dots });
            }
        }
    }
    v
}

fn enhanced_full(fc: &FullConv, d: &LinkDiagram, bq: &Biquasile, w: &BoltzmannWeight) -> EnhancedPolynomial {
    let g = d.to_dual_graph_with(&fc.roles).unwrap();
    let m = w.modulus();
    let values: Vec<u64> = enumerate_colorings(&g, bq)
        .iter()
        .map(|f| {
            let mut total = 0u64;
            for rec in &g.crossings {
                let rule = if rec.sign > 0 { fc.wpos } else { fc.wneg };
                let first = if rule.use_out { rec.y } else { rec.x };
                let (da, db) = if rule.swap_dots { (rec.b, rec.a) } else { (rec.a, rec.b) };
                let c = w.coeff(f.colors[first], f.colors[da], f.colors[db]);
                let term = if rule.negate { (m - c) % m } else { c };
                total = (total + term) % m;
            }
            total
        })
        .collect();
    EnhancedPolynomial::from_multiset(m, values)
}

#[test]
#[ignore]
fn search_conventions() {
    let hopf = LinkDiagram::parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]").unwrap();
    let trefoil = LinkDiagram::parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
    let bq2 = affine_order2();
    let order3 = bqk::enumerate_biquasiles(3).unwrap();
    let moves = [ReidemeisterMove::R1Plus, ReidemeisterMove::R1Minus, ReidemeisterMove::R2];

    let count_invariant = |conv: &RoleConvention| -> bool {
        for base in [&hopf, &trefoil] {
            for bq in std::iter::once(&bq2).chain(order3.iter()) {
                let n0 = count_colorings(&base.to_dual_graph_with(conv).unwrap(), bq);
                for site in 1..=base.edge_count() {
                    for mv in moves {
                        let p = base.perturb(mv, site).unwrap();
                        if count_colorings(&p.to_dual_graph_with(conv).unwrap(), bq) != n0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    };
    let mut role_ok = Vec::new();
    for pos in role_options() {
        for neg in role_options() {
            let conv = RoleConvention { pos, neg };
            if count_invariant(&conv) {
                role_ok.push(conv);
            }
        }
    }
    println!("role tables passing counting invariance: {}", role_ok.len());

    let phi = weight(5, &[("1,1,1", 2), ("1,2,2", 3), ("2,1,1", 4), ("2,2,2", 3)]);
    let phi1 = weight(6, &[("1,1,1", 1), ("1,2,2", 5), ("2,1,1", 3), ("2,2,2", 5)]);
    let phi2 = weight(6, &[("1,1,1", 1), ("1,2,2", 1), ("2,1,1", 2), ("2,2,2", 2)]);
    let phi3 = weight(6, &[("1,2,2", 4), ("2,2,2", 2)]);
    let p_4u = EnhancedPolynomial::from_terms(5, &[(0, 4), (1, 4)]);
    let p_4u4 = EnhancedPolynomial::from_terms(6, &[(0, 4), (4, 4)]);
    let p_4u3 = EnhancedPolynomial::from_terms(6, &[(0, 4), (3, 4)]);
    let p_8 = EnhancedPolynomial::from_terms(6, &[(0, 8)]);

    let mut survivors: Vec<FullConv> = Vec::new();
    for roles in &role_ok {
        for wpos in wrules() {
            'wn: for wneg in wrules() {
                let fc = FullConv { roles: *roles, wpos, wneg };
                if enhanced_full(&fc, &hopf, &bq2, &phi) != p_4u
                    || enhanced_full(&fc, &hopf, &bq2, &phi1) != p_4u4
                    || enhanced_full(&fc, &hopf, &bq2, &phi2) != p_4u3
                    || enhanced_full(&fc, &hopf, &bq2, &phi3) != p_8
                {
                    continue;
                }
                for base in [&hopf, &trefoil] {
                    let v0 = enhanced_full(&fc, base, &bq2, &phi);
                    for site in 1..=base.edge_count() {
                        for mv in moves {
                            let p = base.perturb(mv, site).unwrap();
                            if enhanced_full(&fc, &p, &bq2, &phi) != v0 {
                                continue 'wn;
                            }
                        }
                    }
                }
                for (m, d, s, n) in [(3u64, 1, 1, 2), (5, 2, 3, 4), (5, 3, 2, 2)] {
                    let p = bqk::biquasile::AlexanderParams::new(m, d, s, n).unwrap();
                    let abq = Biquasile::alexander(p);
                    let lw = bqk::boltzmann::linear_weight(p, 1);
                    for base in [&hopf, &trefoil] {
                        let v0 = enhanced_full(&fc, base, &abq, &lw);
                        for site in 1..=base.edge_count() {
                            for mv in moves {
                                let pert = base.perturb(mv, site).unwrap();
                                if enhanced_full(&fc, &pert, &abq, &lw) != v0 {
                                    continue 'wn;
                                }
                            }
                        }
                    }
                }
                // Published per-coloring weight triples on the Hopf link.
                let g = hopf.to_dual_graph_with(roles).unwrap();
                let triples_of = |f: &bqk::coloring::ColoringAssignment| -> Vec<(u8, u8, u8)> {
                    let mut ts: Vec<(u8, u8, u8)> = g
                        .crossings
                        .iter()
                        .map(|rec| {
                            let rule = if rec.sign > 0 { fc.wpos } else { fc.wneg };
                            let first = if rule.use_out { rec.y } else { rec.x };
                            let (da, db) = if rule.swap_dots { (rec.b, rec.a) } else { (rec.a, rec.b) };
                            (f.colors[first], f.colors[da], f.colors[db])
                        })
                        .collect();
                    ts.sort_unstable();
                    ts
                };
                let all = enumerate_colorings(&g, &bq2);
                let has_1 = all.iter().any(|f| triples_of(f) == vec![(1, 1, 2), (1, 1, 2)]);
                let has_2 = all.iter().any(|f| triples_of(f) == vec![(1, 2, 2), (2, 2, 2)]);
                if !has_1 || !has_2 {
                    continue 'wn;
                }
                survivors.push(fc);
            }
        }
    }
    for fc in &survivors {
        println!(
            "survivor roles pos={:?} neg={:?} wpos={:?} wneg={:?}",
            fc.roles.pos, fc.roles.neg, fc.wpos, fc.wneg
        );
    }
    assert_eq!(survivors.len(), 24, "expected the 24 symmetry-related survivors");
    let frozen = FullConv {
        roles: ROLE_CONVENTION,
        wpos: WRule { negate: true, use_out: false, swap_dots: false },
        wneg: WRule { negate: false, use_out: false, swap_dots: false },
    };
    assert_eq!(survivors[0], frozen, "the library freezes the first survivor");
}
