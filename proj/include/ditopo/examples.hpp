#pragma once

#include <string>
#include <vector>

#include "ditopo/complex.hpp"
#include "ditopo/fundcat.hpp"
#include "ditopo/glue.hpp"

namespace ditopo {

// dII on the quarter grid with two ordered circles attached: b1 ~ x=(0,1/4)
// and a2 ~ y=(3/4,0) (space B), and its collapse C along max: dII -> dI.
struct AttachmentExample {
  DiComplex dII, dI, B, C;
  CombMap collapse;  // dII -> dI
  CombMap induced;   // B -> C
  std::vector<std::pair<std::string, std::string>> watch;
  std::vector<HomDiffRow> diff;
  // Ids of the attachment points in B.
  std::string a1, b1, a2, b2;
};
AttachmentExample build_attachment_example();

// X = triangulated n x n grid, Y = columns (s,0) -> (s,1/2) -> (s,1) joined
// by undirected horizontal edges, glued along (s,1/2) ~ (s,1-s).
struct ZModel {
  long n = 4;
  DiComplex X, Y, Z;
  GlueResult glue;
  std::string p0(long i) const;  // Y vertex (i/n, 0) in Z
  std::string p1(long i) const;  // Y vertex (i/n, 1) in Z
  std::string p(long i) const;   // anti-diagonal vertex in Z
};
ZModel build_z_model(long n);

// The collapse X -> X: columns i/n in [a,b] go to b, then rows in
// [1-b, 1-a] go to 1-a (grid indices ia <= ib).
CombMap z_collapse(const ZModel& z, long ia, long ib);

struct ZPushout {
  PushoutResult pushout;
  std::string p0a, p1b;  // ids in Z'
};
ZPushout push_z_along_collapse(const ZModel& z, long ia, long ib);

// Spaces of the square-pasting examples: B and C (one hole each), B', C'
// (half removed), D = B atop C, E, F, and the one-dimensional G; plus the
// mirrored F' and G'. Gfilled is the triangulated solid square with the
// same three marks.
struct PastingExample {
  ContextedComplex B, C, Bp, Cp, D, E, F, G, Gfilled, Fp, Gp;
  CombMap fB, gC;  // B -> B', C -> C'
};
PastingExample build_pasting_example();

// Contexted spaces used by the obstruction rows.
ContextedComplex dII_incomparable();  // dII (quarters) rel x=(0,1/4), y=(3/4,0)
ContextedComplex dI_marked(const std::string& xAt, const std::string& yAt);
ContextedComplex dX_endpoints();        // dX rel its four endpoints
ContextedComplex dI_four(const std::vector<long>& quarters);  // dI at quarters, four marks
ContextedComplex dII_corners_grid(long k);
ContextedComplex dI_corners_grid(long k);

}  // namespace ditopo
