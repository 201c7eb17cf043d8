use homotopy_core::render::render_scene;
use homotopy_core::scene::{parse_rational, parse_scene};
use homotopy_core::{Error, Scene};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = String> {
    prop_oneof![
        (-30i64..=30).prop_map(|n| n.to_string()),
        (-30i64..=30, 1i64..=9).prop_map(|(n, d)| format!("{n}/{d}")),
        (-300i64..=300).prop_map(|n| format!(
            "{}{}.{:02}",
            if n < 0 { "-" } else { "" },
            n.abs() / 100,
            n.abs() % 100
        )),
    ]
}

/// Scene text with punctures on one row and lines above it.
fn scene_text() -> impl Strategy<Value = String> {
    let lines = prop::collection::vec(
        (
            any::<bool>(),
            prop::collection::vec((coord(), coord()), 1..6),
        ),
        0..4,
    );
    (1usize..=3, lines).prop_map(|(n, lines)| {
        let mut s = String::from("# generated\npunctures:\n");
        for i in 0..n {
            s += &format!("  {} -100\n", 2 * i);
        }
        for (k, (based, pts)) in lines.into_iter().enumerate() {
            s += &format!("line l{k}{}:\n", if based { " based" } else { "" });
            for (x, y) in pts {
                s += &format!("  {x} {y}\n");
            }
        }
        s += "graph w wedge 2:\n  walk ab based: +0 +1 +2 +3\n";
        s
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_identity(text in scene_text()) {
        let scene = parse_scene(&text).unwrap();
        let printed = scene.to_string();
        let again: Scene = printed.parse().unwrap();
        prop_assert_eq!(&again, &scene);
        prop_assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn decimals_are_exact(n in -10_000i64..10_000) {
        let text = format!("{}{}.{:03}", if n < 0 { "-" } else { "" }, n.abs() / 1000, n.abs() % 1000);
        prop_assert_eq!(parse_rational(&text).unwrap(), homotopy_core::geometry::ratio(n, 1000));
    }
}

#[test]
fn errors_carry_positions() {
    match parse_scene("punctures:\n 0 0\nline a:\n 1 x\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
    assert!(parse_scene("punctures:\n 0 0\nline a:\n 0 0\n").is_err());
    assert!(parse_scene("punctures:\n 0 0\nline a:\n 1 1\nline a:\n 2 2\n").is_err());
    assert!(parse_scene("punctures:\n 0 0\n 0 0\n").is_err());
}

#[test]
fn svg_structure() {
    let scene = parse_scene(
        "punctures:\n 0 0\n 3 0\n 6 1\nline one:\n -1 1\n -1 -1\n 1 -1\n 1 1\nline two based:\n -2 3\n 8 3\n 8 -3\n -2 -3\n",
    )
    .unwrap();
    let svg = render_scene(&scene).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<polyline ").count(), 2);
    assert_eq!(svg.matches(r#"data-name="two""#).count(), 1);
    assert_eq!(svg.matches(r#"<circle class="puncture""#).count(), 3);
    assert_eq!(svg.matches(r#"<line class="ray""#).count(), 3);
    // around all three punctures each ray is crossed once
    assert_eq!(svg.matches(r#"<text class="crossing""#).count(), 4);
}
