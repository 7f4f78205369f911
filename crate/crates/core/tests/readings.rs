//! Alternative readings of printed identities, kept beside the implemented
//! ones.

use neutromagma::constructors::{dihedral, ln, ln_multipliers, symmetric_group};
use neutromagma::laws::{check_identity_law, check_identity_law_with, BruckReading, IdentityLaw};
use neutromagma::FiniteMagma;

/// `((xy)z)y = x(y(zx))` as printed.
fn printed_moufang2(m: &FiniteMagma) -> bool {
    let p = |a, b| m.op(a, b);
    m.elements()
        .all(|x| m.elements().all(|y| m.elements().all(|z| p(p(p(x, y), z), y) == p(x, p(y, p(z, x))))))
}

#[test]
fn printed_moufang2_fails_in_nonabelian_groups() {
    for g in [symmetric_group(3).unwrap(), dihedral(4).unwrap()] {
        assert!(!printed_moufang2(&g));
        assert!(check_identity_law(&g, IdentityLaw::Moufang2, None).unwrap().holds);
    }
}

#[test]
fn no_loop_member_satisfies_either_moufang2_reading() {
    for n in [5, 7, 9, 15] {
        for m in ln_multipliers(n) {
            let g = ln(n, m).unwrap();
            assert!(!printed_moufang2(&g), "L{n}({m})");
            assert!(!check_identity_law(&g, IdentityLaw::Moufang2, None).unwrap().holds, "L{n}({m})");
        }
    }
}

#[test]
fn no_loop_member_satisfies_either_bruck_grouping() {
    for n in [5, 7, 9, 15] {
        for m in ln_multipliers(n) {
            let g = ln(n, m).unwrap();
            for r in [BruckReading::LeftGrouped, BruckReading::RightGrouped] {
                assert!(!check_identity_law_with(&g, IdentityLaw::BruckIdentity, None, r).unwrap().holds);
            }
        }
    }
}
