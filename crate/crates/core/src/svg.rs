//! SVG 1.1 drawings of crease patterns. Mountains are thick, valleys thin,
//! unassigned creases thin and dashed.

use std::fmt::Write as _;

use crate::model::{CreasePattern, Mv, MvAssignment};

const SIZE: f64 = 400.0;
const MARGIN: f64 = 10.0;
const MOUNTAIN_WIDTH: &str = "2.0";
const VALLEY_WIDTH: &str = "0.8";
const DASH: &str = "4,3";

pub fn render_svg(pattern: &CreasePattern, mv: Option<&MvAssignment>) -> String {
    let vs = pattern.vertices();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(first) = vs.first() {
        (x0, y0, x1, y1) = (first.x, first.y, first.x, first.y);
        for v in vs {
            x0 = x0.min(v.x);
            x1 = x1.max(v.x);
            y0 = y0.min(v.y);
            y1 = y1.max(v.y);
        }
    }
    let span = (x1 - x0).max(y1 - y0);
    let scale = if span > 0.0 { SIZE / span } else { 1.0 };
    let width = (x1 - x0) * scale + 2.0 * MARGIN;
    let height = (y1 - y0) * scale + 2.0 * MARGIN;
    // sheet coordinates have y up, SVG has y down
    let px = |x: f64| (x - x0) * scale + MARGIN;
    let py = |y: f64| (y1 - y) * scale + MARGIN;

    let mut out = String::new();
    writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>").unwrap();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.3}\" height=\"{height:.3}\" viewBox=\"0 0 {width:.3} {height:.3}\">"
    )
    .unwrap();
    writeln!(out, "  <g stroke=\"black\" fill=\"none\" stroke-linecap=\"round\">").unwrap();
    for c in pattern.creases() {
        let a = pattern.vertex(c.endpoints.0).expect("endpoint exists");
        let b = pattern.vertex(c.endpoints.1).expect("endpoint exists");
        let style = match mv.and_then(|m| m.get(c.id)) {
            Some(Mv::Mountain) => format!("class=\"mountain\" stroke-width=\"{MOUNTAIN_WIDTH}\""),
            Some(Mv::Valley) => format!("class=\"valley\" stroke-width=\"{VALLEY_WIDTH}\""),
            None => format!("class=\"unassigned\" stroke-width=\"{VALLEY_WIDTH}\" stroke-dasharray=\"{DASH}\""),
        };
        writeln!(
            out,
            "    <line id=\"c{}\" x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" {style}/>",
            c.id,
            px(a.x),
            py(a.y),
            px(b.x),
            py(b.y)
        )
        .unwrap();
    }
    writeln!(out, "  </g>").unwrap();
    writeln!(out, "  <g fill=\"black\">").unwrap();
    for v in vs {
        writeln!(out, "    <circle id=\"v{}\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"2\"/>", v.id, px(v.x), py(v.y)).unwrap();
    }
    writeln!(out, "  </g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_mv;
    use crate::generators::gen_square_twist;
    use crate::model::{Crease, CreaseId, Vertex, VertexId, VertexKind};

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn single_mountain() {
        let v = |id, x| Vertex { id: VertexId(id), x, y: 0.0, kind: VertexKind::Boundary };
        let p = CreasePattern::new(vec![v(0, 0.0), v(1, 1.0)], vec![Crease { id: CreaseId(0), endpoints: (VertexId(0), VertexId(1)) }])
            .unwrap();
        let mv: MvAssignment = [(CreaseId(0), Mv::Mountain)].into_iter().collect();
        let svg = render_svg(&p, Some(&mv));
        assert_eq!(count(&svg, "<line "), 1);
        assert_eq!(count(&svg, "stroke-width=\"2.0\""), 1);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn one_line_per_crease() {
        let s = gen_square_twist(1, 1).unwrap();
        let mv = enumerate_mv(&s.base, Some(1)).unwrap().remove(0);
        let svg = render_svg(&s.base, Some(&mv));
        assert_eq!(count(&svg, "<line "), s.base.creases().len());
        assert_eq!(count(&svg, "stroke-dasharray"), 0);
        let s = gen_square_twist(2, 2).unwrap();
        let svg = render_svg(&s.base, None);
        assert_eq!(count(&svg, "<line "), 40);
        assert_eq!(count(&svg, "class=\"unassigned\""), 40);
        assert_eq!(count(&svg, "<circle "), s.base.vertices().len());
    }

    #[test]
    fn empty_pattern() {
        let svg = render_svg(&CreasePattern::empty(), None);
        assert_eq!(count(&svg, "<line "), 0);
        assert!(svg.contains("version=\"1.1\""));
    }
}
