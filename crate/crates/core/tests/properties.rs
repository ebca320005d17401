//! Runs every registered property sweep on a suitable domain, so the whole
//! registry stays wired and counterexample-free.

use gridthresh::{check_property, oracle::property_ids, GridDim};

fn dim(m: i64, n: i64) -> GridDim {
    GridDim::new(m, n).unwrap()
}

/// A domain on which each sweep is meaningful and fast.
fn domain_for(property: &str) -> GridDim {
    match property {
        "claim_collinear_segments" => dim(7, 7),
        "claim_tangent_on_line" => dim(4, 4),
        "threshold_bijection" | "threshold_round_trip" => dim(4, 4),
        "threshold_left_tangent" | "threshold_endpoints_essential" => dim(4, 4),
        "inequality_consistency" | "claim_points_on_line" => dim(4, 4),
        "tangent_separation" => dim(4, 4),
        "thm4_iff" | "claim_zeros_ones_intersection" => dim(4, 4),
        "cor_all_ones_on_line" | "cor_superb_intersect" => dim(4, 4),
        "claim_segments_zeros_ones" | "cor_intersection_is_point" => dim(4, 4),
        "thm4_essentiality" | "thm5_existence" | "thm5_uniqueness_boundary" => dim(4, 4),
        "lemma5_boundary_singleton" | "singleton_count" => dim(4, 4),
        "oracle_segment_function" => dim(5, 5),
        _ => dim(3, 3),
    }
}

#[test]
fn every_registered_property_passes() {
    let ids = property_ids();
    assert_eq!(ids.len(), 28);
    for id in ids {
        let d = domain_for(id);
        let report = check_property(id, d).unwrap();
        assert!(report.passed(), "{id} on {d}: {:#?}", report.failures);
        assert!(report.cases_checked > 0, "{id} on {d} checked nothing");
    }
}

#[test]
fn singleton_count_also_holds_on_5x5() {
    let report = check_property("singleton_count", dim(5, 5)).unwrap();
    assert!(report.passed(), "{:#?}", report.failures);
    assert_eq!(report.cases_checked, 9); // the 3x3 interior
}

#[test]
fn rectangular_grids_are_not_special() {
    for id in [
        "thm4_iff",
        "thm5_existence",
        "thm5_uniqueness_boundary",
        "lemma5_boundary_singleton",
    ] {
        let report = check_property(id, dim(5, 3)).unwrap();
        assert!(report.passed(), "{id}: {:#?}", report.failures);
    }
}
