//! SVG of the checkered Farey tessellation with a coded geodesic.
//!
//! Letters are found geometrically: starting in the triangle just past the
//! vertical edge at `sign(forward)`, the walk crosses Farey edges one at a
//! time and records, per triangle, on which side of the geodesic the vertex
//! shared by the entry and exit edges lies.

use std::fmt::Write as _;

use cutseq_exact::QuadraticSurd as Q;
use cutseq_geodesic::{word_string, Letter, OrientedGeodesic, Parity, Shade, Side};

const WIDTH: f64 = 800.0;
const LIGHT: &str = "#fdf6e3";
const DARK: &str = "#8fa3a8";
const MAX_DENOMINATOR: i64 = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub x0: f64,
    pub x1: f64,
    pub ymax: f64,
}

impl Window {
    pub fn parse(s: &str) -> Result<Window, String> {
        let v: Vec<f64> = s
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| format!("bad window component {t:?}")))
            .collect::<Result<_, _>>()?;
        let [x0, x1, ymax] = v[..] else {
            return Err("window is xmin,xmax,ymax".into());
        };
        if !(x0.is_finite() && x1.is_finite() && ymax.is_finite()) || x0 >= x1 || ymax <= 0.0 {
            return Err(format!("degenerate window {s:?}"));
        }
        Ok(Window { x0, x1, ymax })
    }

    fn scale(&self) -> f64 {
        WIDTH / (self.x1 - self.x0)
    }

    fn height(&self) -> f64 {
        (self.ymax * self.scale()).round()
    }

    fn px(&self, x: f64) -> f64 {
        (x - self.x0) * self.scale()
    }

    fn py(&self, y: f64) -> f64 {
        (self.ymax - y) * self.scale()
    }
}

/// `p/q` with `q >= 0`; infinity is `(1, 0)`.
type Vertex = (i64, i64);
const INF: Vertex = (1, 0);

fn norm(p: i64, q: i64) -> Vertex {
    match (q.signum(), p.signum()) {
        (0, _) => INF,
        (-1, _) => (-p, -q),
        _ => (p, q),
    }
}

fn value(v: Vertex) -> Option<f64> {
    (v.1 != 0).then(|| v.0 as f64 / v.1 as f64)
}

fn exact(v: Vertex) -> Option<Q> {
    (v.1 != 0).then(|| Q::from_ratio(v.0, v.1))
}

#[derive(Clone, Debug)]
pub struct Triangle {
    pub vertices: [Vertex; 3],
    pub light: bool,
}

/// Triangles `(n, n+1, inf)` meeting the window and `depth` generations of
/// triangles below them.
pub fn tessellation(w: &Window, depth: u32) -> Vec<Triangle> {
    let lo = w.x0.floor() as i64 - 1;
    let hi = w.x1.ceil() as i64 + 1;
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    for n in lo..hi {
        // (-1, 0, inf) is light
        let light = n.rem_euclid(2) == 1;
        out.push(Triangle { vertices: [(n, 1), (n + 1, 1), INF], light });
        frontier.push(((n, 1), (n + 1, 1), light));
    }
    for _ in 0..depth {
        let mut next = Vec::new();
        for (a, b, above) in frontier {
            let (xa, xb) = (value(a).unwrap(), value(b).unwrap());
            if xb < w.x0 || xa > w.x1 {
                continue;
            }
            let m = norm(a.0 + b.0, a.1 + b.1);
            out.push(Triangle { vertices: [a, m, b], light: !above });
            next.push((a, m, !above));
            next.push((m, b, !above));
        }
        frontier = next;
    }
    out
}

fn triangle_path(w: &Window, t: &Triangle) -> String {
    let s = w.scale();
    let base = w.py(0.0);
    let top = w.py(w.ymax) - 1.0;
    match t.vertices {
        [a, b, INF] => {
            let (xa, xb) = (value(a).unwrap(), value(b).unwrap());
            format!(
                "M{:.2},{top:.2} L{:.2},{base:.2} A{r:.2},{r:.2} 0 0 1 {:.2},{base:.2} L{:.2},{top:.2} Z",
                w.px(xa),
                w.px(xa),
                w.px(xb),
                w.px(xb),
                r = (xb - xa) / 2.0 * s,
            )
        }
        [a, m, b] => {
            let (xa, xm, xb) = (value(a).unwrap(), value(m).unwrap(), value(b).unwrap());
            let r = |u: f64, v: f64| (v - u) / 2.0 * s;
            format!(
                "M{:.2},{base:.2} A{r1:.2},{r1:.2} 0 0 1 {:.2},{base:.2} A{r2:.2},{r2:.2} 0 0 0 {:.2},{base:.2} \
                 A{r3:.2},{r3:.2} 0 0 0 {:.2},{base:.2} Z",
                w.px(xa),
                w.px(xb),
                w.px(xm),
                w.px(xa),
                r1 = r(xa, xb),
                r2 = r(xm, xb),
                r3 = r(xa, xm),
            )
        }
    }
}

/// A letter of the cutting sequence and where the geodesic crosses its triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct Crossing {
    pub letter: Letter,
    pub at: (f64, f64),
}

struct Geo {
    u: Q,
    v: Q,
    c: f64,
    r: f64,
}

impl Geo {
    fn new(g: &OrientedGeodesic) -> Geo {
        let (u, v) = (g.backward.to_f64(), g.forward.to_f64());
        Geo { u: g.backward.clone(), v: g.forward.clone(), c: (u + v) / 2.0, r: (v - u).abs() / 2.0 }
    }

    fn crosses(&self, x: Vertex, y: Vertex) -> bool {
        let between = |z: &Q| match (exact(x), exact(y)) {
            (Some(a), None) | (None, Some(a)) => *z < a,
            (Some(a), Some(b)) => {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                lo < *z && *z < hi
            }
            (None, None) => false,
        };
        between(&self.u) != between(&self.v)
    }

    fn left(&self, x: Vertex) -> bool {
        let rightward = self.u < self.v;
        match exact(x) {
            None => rightward,
            Some(z) => {
                let inside = if rightward { self.u < z && z < self.v } else { self.v < z && z < self.u };
                inside != rightward
            }
        }
    }

    /// Where the geodesic meets the edge `xy`.
    fn meet(&self, x: Vertex, y: Vertex) -> (f64, f64) {
        let px = match (value(x), value(y)) {
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => {
                let (c2, r2) = ((a + b) / 2.0, (b - a).abs() / 2.0);
                (self.r * self.r - r2 * r2 + c2 * c2 - self.c * self.c) / (2.0 * (c2 - self.c))
            }
            (None, None) => self.c,
        };
        (px, (self.r * self.r - (px - self.c).powi(2)).max(0.0).sqrt())
    }

    fn on_arc(&self, p: (f64, f64), q: (f64, f64)) -> (f64, f64) {
        let (mx, my) = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
        let t = my.atan2(mx - self.c);
        (self.c + self.r * t.cos(), self.r * t.sin())
    }
}

/// The first `n` letters after the base point of a geodesic with
/// `|forward| > 1` and `backward` on the other side of `sign(forward)`.
pub fn crossings(g: &OrientedGeodesic, parity: Parity, n: usize) -> Result<Vec<Crossing>, String> {
    let s = g.sign() as i64;
    let geo = Geo::new(g);
    let edge = [(s, 1), INF];
    if g.forward.abs() <= Q::one() || !geo.crosses(edge[0], edge[1]) {
        return Err("geodesic does not cross the vertical edge at sign(forward)".into());
    }
    let (mut a, mut b, mut c) = (edge[0], edge[1], (2 * s, 1));
    let mut light = s > 0;
    let mut enter = geo.meet(a, b);
    let mut out = Vec::new();
    while out.len() < n {
        let (shared, other, far) = if geo.crosses(a, c) { (a, b, c) } else { (b, a, c) };
        let side = if geo.left(shared) { Side::L } else { Side::R };
        let shade = match parity {
            Parity::Even => Shade::Unshaded,
            Parity::Odd if light => Shade::Light,
            Parity::Odd => Shade::Dark,
        };
        let exit = geo.meet(shared, far);
        out.push(Crossing { letter: Letter { side, shade }, at: geo.on_arc(enter, exit) });
        let plus = norm(shared.0 + far.0, shared.1 + far.1);
        let minus = norm(shared.0 - far.0, shared.1 - far.1);
        let next = if plus == other { minus } else { plus };
        if next.1.abs() > MAX_DENOMINATOR || next.0.abs() > MAX_DENOMINATOR {
            break;
        }
        (a, b, c) = (shared, far, next);
        light = !light;
        enter = exit;
    }
    Ok(out)
}

pub struct Rendered {
    pub svg: String,
    pub letters: Vec<Letter>,
}

pub fn render(w: &Window, depth: u32, geodesic: Option<(&OrientedGeodesic, Parity, usize)>) -> Result<Rendered, String> {
    let h = w.height();
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{h}" viewBox="0 0 {WIDTH} {h}">"#
    );
    let _ = writeln!(svg, "<desc>window [{}, {}] x (0, {}], depth {depth}</desc>", w.x0, w.x1, w.ymax);
    let _ = writeln!(svg, r#"<defs><clipPath id="window"><rect x="0" y="0" width="{WIDTH}" height="{h}"/></clipPath></defs>"#);
    let _ = writeln!(svg, r##"<rect x="0" y="0" width="{WIDTH}" height="{h}" fill="#f0f0f0"/>"##);
    let _ = writeln!(svg, r##"<g clip-path="url(#window)" stroke="#3c3c3c" stroke-width="0.8">"##);
    for t in tessellation(w, depth) {
        let fill = if t.light { LIGHT } else { DARK };
        let _ = writeln!(svg, r#"<path class="{}" d="{}" fill="{fill}"/>"#, if t.light { "light" } else { "dark" }, triangle_path(w, &t));
    }
    let _ = writeln!(svg, "</g>");
    let mut letters = Vec::new();
    if let Some((g, parity, n)) = geodesic {
        let (u, v) = (g.backward.to_f64(), g.forward.to_f64());
        let r = (v - u).abs() / 2.0 * w.scale();
        let _ = writeln!(
            svg,
            r##"<path class="geodesic" clip-path="url(#window)" d="M{:.2},{:.2} A{r:.2},{r:.2} 0 0 {} {:.2},{:.2}" fill="none" stroke="#b22222" stroke-width="2"/>"##,
            w.px(u),
            w.py(0.0),
            u32::from(u < v),
            w.px(v),
            w.py(0.0),
        );
        let cs = crossings(g, parity, n)?;
        let _ = writeln!(svg, r#"<g class="letters" font-family="serif" font-size="14" text-anchor="middle">"#);
        let mut last = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for c in &cs {
            let (x, y) = (w.px(c.at.0), w.py(c.at.1) - 4.0);
            // labels closer than a glyph are dropped
            if (0.0..=WIDTH).contains(&x) && (0.0..=h).contains(&y) && (x - last.0).hypot(y - last.1) >= 14.0 {
                last = (x, y);
                let _ = writeln!(svg, r#"<text x="{x:.2}" y="{y:.2}">{}</text>"#, word_string(&[c.letter]));
            }
        }
        let _ = writeln!(svg, "</g>");
        letters = cs.into_iter().map(|c| c.letter).collect();
    }
    svg.push_str("</svg>\n");
    Ok(Rendered { svg, letters })
}
