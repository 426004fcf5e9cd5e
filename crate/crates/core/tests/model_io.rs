use tritile_core::analysis::{extract_relations, Witness};
use tritile_core::exact::{AngleClass, EdgeLabel, TileSpec};
use tritile_core::generators::{gen_kite, gen_parallelogram, gen_quadratic, GenParams, GeneratorRegistry};
use tritile_core::geometry::{Point, Polygon};
use tritile_core::model::{build_tiling, tiling_from_json, tiling_to_json, BuildOptions, LabelOrder, Placement, TilingMode};
use tritile_core::TilingError;

fn spec() -> TileSpec {
    TileSpec::from_integer_sides(3, 5).unwrap()
}

fn place(x: f64, y: f64, j: i64, k: i64, labels: &str) -> Placement {
    Placement { anchor: Point::new(x, y), dir: AngleClass::new(j, k), labels: LabelOrder::parse(labels).unwrap() }
}

#[test]
fn json_round_trip_is_stable() {
    let reg = GeneratorRegistry::builtin();
    for name in reg.names() {
        for shared in EdgeLabel::ALL {
            let t = reg.get(name).unwrap().generate(&spec(), &GenParams { n: 2, shared, frame: AngleClass::ZERO }).unwrap();
            let text = tiling_to_json(&t);
            let back = tiling_from_json(&text, None).unwrap();
            assert_eq!(back.mode, t.mode);
            assert_eq!(back.tiles.len(), t.tiles.len());
            assert_eq!(back.segments.len(), t.segments.len());
            assert_eq!(back.vertices.len(), t.vertices.len());
            for (x, y) in back.tiles.iter().zip(&t.tiles) {
                assert_eq!(x.labels, y.labels);
                assert_eq!(x.first_edge_dir, y.first_edge_dir);
                assert!(x.anchor.dist(y.anchor) < 1e-9);
            }
            // Loading snaps coordinates onto shared vertices, so the text settles after one cycle.
            let settled = tiling_to_json(&back);
            let again = tiling_to_json(&tiling_from_json(&settled, None).unwrap());
            assert_eq!(again, settled, "{name}");
        }
    }
}

#[test]
fn overlapping_tiles_are_rejected() {
    let p = [place(0.0, 0.0, 0, 0, "cab"), place(0.0, 0.0, 0, 0, "cab")];
    assert!(matches!(build_tiling(&spec(), &p, None, BuildOptions::fragment()), Err(TilingError::Overlap(0, 1))));
}

#[test]
fn uncovered_region_is_a_coverage_error() {
    let par = gen_parallelogram(&spec(), EdgeLabel::C, AngleClass::ZERO).unwrap();
    let one = [par.tiles[0].placement()];
    let r = build_tiling(&spec(), &one, par.region.clone(), BuildOptions::default());
    assert!(matches!(r, Err(TilingError::Coverage(_))), "{r:?}");
}

#[test]
fn mirrored_tiles_can_be_forbidden() {
    let kite = gen_kite(&spec(), EdgeLabel::C, AngleClass::ZERO).unwrap();
    let pl: Vec<_> = kite.tiles.iter().map(|t| t.placement()).collect();
    let opts = BuildOptions { mode: TilingMode::Full, allow_mirrored: false };
    assert!(matches!(build_tiling(&spec(), &pl, kite.region.clone(), opts), Err(TilingError::MirroredNotAllowed(_))));
}

#[test]
fn self_crossing_region_is_rejected() {
    let bowtie = Polygon::new(vec![Point::new(0.0, 0.0), Point::new(7.0, 7.0), Point::new(7.0, 0.0), Point::new(0.0, 7.0)]);
    let r = build_tiling(&spec(), &[place(0.0, 0.0, 0, 0, "cab")], Some(bowtie), BuildOptions::default());
    assert!(matches!(r, Err(TilingError::NonSimpleBoundary(_))), "{r:?}");
}

#[test]
fn nearly_coincident_vertices_are_ambiguous() {
    // Vertices at x = 0 and x = 1.5e-8 are distinct; a third at 0.75e-8 is within snap
    // distance of both.
    let h = 1.5e-8;
    let p = [place(0.0, 0.0, 0, 0, "cab"), place(h, 0.0, 3, 0, "cab"), place(h / 2.0 + 7.0, 0.0, 3, 0, "cab")];
    let r = build_tiling(&spec(), &p, None, BuildOptions::fragment());
    assert!(matches!(r, Err(TilingError::SnapAmbiguity { .. })), "{r:?}");
}

#[test]
fn parse_errors_carry_positions() {
    let r = tiling_from_json("{\n  \"spec\": {\"a\": \"3\", \"b\": \"5\"},\n  \"tiles\": [\n", None);
    match r {
        Err(TilingError::Parse { line, .. }) => assert!(line >= 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn clockwise_vertex_lists_are_rejected() {
    let t = gen_quadratic(&spec(), 1, AngleClass::ZERO).unwrap();
    let text = tiling_to_json(&t);
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let verts = v["tiles"][0]["vertices"].as_array_mut().unwrap();
    verts.reverse();
    let r = tiling_from_json(&v.to_string(), None);
    assert!(matches!(r, Err(TilingError::Orientation(0))), "{r:?}");
}

#[test]
fn unequal_sides_of_a_strip_give_an_a_relation() {
    // a = 5, b = 3, c = 7: two a-edges above the x-axis against c + b below.
    let spec = TileSpec::from_integer_sides(5, 3).unwrap();
    let p = [
        place(0.0, 0.0, 0, 0, "abc"),
        place(5.0, 0.0, 0, 0, "abc"),
        place(10.0, 0.0, 3, 0, "cab"),
        place(3.0, 0.0, 3, 0, "bca"),
    ];
    let t = build_tiling(&spec, &p, None, BuildOptions::fragment()).unwrap();
    let rels = extract_relations(&t);
    assert!(rels.impossible.is_empty());
    let r = rels.relations.iter().find(|r| matches!(r.witness, Witness::Segment(_))).expect("one relation");
    assert_eq!((r.kind, r.j, r.p, r.q), (EdgeLabel::A, 2, 1, 1));
    assert_eq!(r.to_string(), "2a = 1b + 1c");
}

#[test]
fn files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    let t = gen_quadratic(&spec(), 3, AngleClass::ZERO).unwrap();
    tritile_core::model::save_tiling(&t, &path).unwrap();
    let back = tritile_core::model::load_tiling(&path, None).unwrap();
    assert_eq!(back.tiles.len(), 9);
    assert!(matches!(tritile_core::model::load_tiling(&dir.path().join("missing.json"), None), Err(TilingError::Io(_))));
}
