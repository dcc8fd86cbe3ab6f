#ifndef BIDISC_CLASSIFY_HPP
#define BIDISC_CLASSIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bidisc/gaction.hpp"

namespace bidisc {

enum class ClassifyOutcome {
  ConstantDisc,
  EqualityCase1,      // d=4: Y0*Y1*(Y0^2 + (mu*x+lambda)*Y0*Y1 + Y1^2)
  EqualityCase2,      // d=4: Y1*(H(Y) + x*Y1^3), H cubic
  EqualityCase3_odd,  // d odd: Y1*H(Y0^2 + x*Y1^2, Y1^2)
  EqualityCase4_even, // d even: H(Y0^2 + x*Y1^2, Y1^2)
  AboveBound,
};

const char* classify_outcome_name(ClassifyOutcome o);

struct ClassificationVerdict {
  int d = 0;
  Degree deg_disc;
  int bound = 0;  // ceil((d-1)/2)
  ClassifyOutcome outcome = ClassifyOutcome::AboveBound;
  std::optional<GMat> witness;           // ConstantDisc: maps the product into K[Y]
  std::vector<GMat> normalising_word;    // rational normalisation steps taken
  std::optional<BForm> normal_form_reached;  // exact family member if reached
  bool irreducibility_assumed = false;
  std::string note;
};

// factors: pairwise coprime, each squarefree, none with a factor in K[x];
// nonlinear factors are tagged K[x][Y]-irreducible by the caller (confirmed
// here when the Ruppert-Gao count is 1).
ClassificationVerdict classify_form(const std::vector<BForm>& factors);

BForm normal_form_case1(const Rat& mu, const Rat& lambda);
BForm normal_form_case2(const std::array<Rat, 4>& h);  // h[k] multiplies Y0^k Y1^(3-k)
BForm normal_form_odd(const std::vector<Rat>& a);
BForm normal_form_even(const std::vector<Rat>& a);

struct BoundCheck {
  Degree deg_disc;
  int bound = 0;
  bool ok = false;
};

BoundCheck verify_bound(const std::vector<BForm>& factors);

// Discriminant of the product through the multiplicative formula
// Disc(FG) = Disc(F) Disc(G) Res(F,G)^2, with Disc = 1 on degree <= 1.
UPoly product_disc(const std::vector<BForm>& factors);

}  // namespace bidisc

#endif
