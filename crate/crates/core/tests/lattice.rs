use std::collections::BTreeSet;

use stabclass::lattice::lattice;
use stabclass::subgroup;

fn edge_set(edges: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    edges.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

/// The drawn single-qubit subgroup diagram. The nine per-letter edges are
/// generated; the rest are listed.
fn reference_subgroup_edges() -> BTreeSet<(String, String)> {
    let mut out = BTreeSet::new();
    let letters = [
        ("X", "X+theta_YZ", ["theta_Y+Z", "theta_Y-Z"]),
        ("Y", "Y+theta_XZ", ["theta_X+Z", "theta_X-Z"]),
        ("Z", "Z+theta_XY", ["theta_X+Y", "theta_X-Y"]),
    ];
    for (p, pt, thetas) in letters {
        let r = format!("R{p}");
        let pr = format!("P+R{p}");
        for (a, b) in [
            ("BOT", p),
            (p, &r),
            (&r, &pr),
            (&pr, "TOP"),
            (p, "P"),
            ("P", &pr),
            (p, pt),
            (pt, &pr),
            (thetas[0], pt),
            (thetas[1], pt),
        ] {
            out.insert((a.to_string(), b.to_string()));
        }
    }
    let thetas = ["theta_X+Y", "theta_X-Y", "theta_X+Z", "theta_X-Z", "theta_Y+Z", "theta_Y-Z"];
    let gammas = ["+++", "+--", "-+-", "--+"];
    for t in thetas {
        out.insert(("BOT".into(), t.into()));
    }
    for g in gammas {
        out.insert(("BOT".into(), format!("Gamma_{g}")));
        out.insert((format!("Gamma_{g}"), "P+Gamma".into()));
        out.insert((format!("Gamma_{g}"), format!("theta_{g}")));
        out.insert((format!("theta_{g}"), "TOP".into()));
    }
    out.insert(("P".into(), "P+Gamma".into()));
    out.insert(("P+Gamma".into(), "TOP".into()));
    // The drawing's theta-to-theta_sss edges use the opposite sign on the
    // theta label from the algebraic definitions of the theta gates.
    let flip = |t: &str| if t.contains('+') { t.replace('+', "-") } else { t.replace('-', "+") };
    let drawn = [
        ("+++", ["theta_Y+Z", "theta_X+Z", "theta_X+Y"]),
        ("-+-", ["theta_X-Y", "theta_Y-Z", "theta_X+Z"]),
        ("+--", ["theta_X-Z", "theta_X-Y", "theta_Y+Z"]),
        ("--+", ["theta_X-Z", "theta_Y-Z", "theta_X+Y"]),
    ];
    for (g, ts) in drawn {
        for t in ts {
            out.insert((flip(t), format!("theta_{g}")));
        }
    }
    out
}

#[test]
fn subgroup_diagram_matches_reference() {
    let s = subgroup::subgroups();
    let got: BTreeSet<(String, String)> =
        subgroup::hasse_edges().into_iter().map(|(a, b)| (s[a].name.to_string(), s[b].name.to_string())).collect();
    let want = reference_subgroup_edges();
    assert_eq!(want.len(), 66);
    assert_eq!(got, want);
}

#[test]
fn gamma_theta_closure() {
    // Gamma_+++ with one of the thetas perpendicular to (1,1,1) gives the S3.
    let g = subgroup::subgroup_closure(&[
        stabclass::OneQubit::from_name("GAMMA_PPP").unwrap(),
        stabclass::OneQubit::from_name("THETA_YmZ").unwrap(),
    ]);
    assert_eq!(g.name, "theta_+++");
    let g = subgroup::subgroup_closure(&[
        stabclass::OneQubit::from_name("GAMMA_PPP").unwrap(),
        stabclass::OneQubit::from_name("THETA_YpZ").unwrap(),
    ]);
    assert_eq!(g.name, "TOP");
}

const NON_DEGENERATE_EDGES: [(&str, &str); 41] = [
    ("C(Y,X)+P+RX", "ALL"),
    ("C(Z,Y)+P+RY", "ALL"),
    ("C(X,Z)+P+RZ", "ALL"),
    ("T4+P+Gamma", "ALL"),
    ("T4+P+RX", "C(Y,X)+P+RX"),
    ("C(X,Z)+P", "C(Y,X)+P+RX"),
    ("C(Y,X)+P", "C(Y,X)+P+RX"),
    ("T4+P+RY", "C(Z,Y)+P+RY"),
    ("C(Y,X)+P", "C(Z,Y)+P+RY"),
    ("C(Z,Y)+P", "C(Z,Y)+P+RY"),
    ("T4+P+RZ", "C(X,Z)+P+RZ"),
    ("C(Z,Y)+P", "C(X,Z)+P+RZ"),
    ("C(X,Z)+P", "C(X,Z)+P+RZ"),
    ("C(X,X)+P+RX", "T4+P+RX"),
    ("C(Y,Y)+P+RY", "T4+P+RY"),
    ("C(Z,Z)+P+RZ", "T4+P+RZ"),
    ("C(X,X)+RX", "C(X,X)+P+RX"),
    ("C(X,X)+P", "C(X,X)+P+RX"),
    ("C(X,X)+X+theta_YZ", "C(X,X)+P+RX"),
    ("C(Y,Y)+RY", "C(Y,Y)+P+RY"),
    ("C(Y,Y)+P", "C(Y,Y)+P+RY"),
    ("C(Y,Y)+Y+theta_XZ", "C(Y,Y)+P+RY"),
    ("C(Z,Z)+RZ", "C(Z,Z)+P+RZ"),
    ("C(Z,Z)+P", "C(Z,Z)+P+RZ"),
    ("C(Z,Z)+Z+theta_XY", "C(Z,Z)+P+RZ"),
    ("C(X,X)+X", "C(X,X)+RX"),
    ("C(X,X)+X", "C(X,X)+P"),
    ("C(X,X)+X", "C(X,X)+X+theta_YZ"),
    ("C(Y,Y)+Y", "C(Y,Y)+RY"),
    ("C(Y,Y)+Y", "C(Y,Y)+P"),
    ("C(Y,Y)+Y", "C(Y,Y)+Y+theta_XZ"),
    ("C(Z,Z)+Z", "C(Z,Z)+RZ"),
    ("C(Z,Z)+Z", "C(Z,Z)+P"),
    ("C(Z,Z)+Z", "C(Z,Z)+Z+theta_XY"),
    ("T4+P", "T4+P+Gamma"),
    ("T4+P", "T4+P+RX"),
    ("T4+P", "T4+P+RY"),
    ("T4+P", "T4+P+RZ"),
    ("T4+P", "C(X,Z)+P"),
    ("T4+P", "C(Y,X)+P"),
    ("T4+P", "C(Z,Y)+P"),
];

#[test]
fn class_diagram_matches_reference() {
    let l = lattice();
    let name = |i: usize| l.get(i).name.clone();
    let got: BTreeSet<(String, String)> = l
        .covers()
        .iter()
        .filter(|&&(a, b)| !l.get(a).is_degenerate() && !l.get(b).is_degenerate())
        .map(|&(a, b)| (name(a), name(b)))
        .collect();
    assert_eq!(got, edge_set(&NON_DEGENERATE_EDGES));
}

#[test]
fn degenerate_part_is_subgroup_order() {
    let l = lattice();
    let s = subgroup::subgroups();
    let got: BTreeSet<(String, String)> = l
        .covers()
        .iter()
        .filter(|&&(a, b)| l.get(a).is_degenerate() && l.get(b).is_degenerate())
        .map(|&(a, b)| (l.get(a).name.clone(), l.get(b).name.clone()))
        .collect();
    let want: BTreeSet<(String, String)> =
        subgroup::hasse_edges().into_iter().map(|(a, b)| (s[a].name.to_string(), s[b].name.to_string())).collect();
    assert_eq!(got, want);
}

#[test]
fn bridges_between_parts() {
    // Every degenerate class sits under a non-degenerate one; TOP directly under ALL.
    let l = lattice();
    let bridges: BTreeSet<(String, String)> = l
        .covers()
        .iter()
        .filter(|&&(a, b)| l.get(a).is_degenerate() && !l.get(b).is_degenerate())
        .map(|&(a, b)| (l.get(a).name.clone(), l.get(b).name.clone()))
        .collect();
    assert!(bridges.contains(&("TOP".to_string(), "ALL".to_string())));
    assert!(bridges.contains(&("Z".to_string(), "C(Z,Z)+Z".to_string())));
    assert!(bridges.contains(&("P+Gamma".to_string(), "T4+P+Gamma".to_string())));
    assert_eq!(l.covers().len(), 66 + 41 + bridges.len());
}

#[test]
fn dot_export_lists_every_class() {
    let dot = lattice().to_dot();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 57);
    assert_eq!(dot.matches("style=dashed").count(), 30);
}
