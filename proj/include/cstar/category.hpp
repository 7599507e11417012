// Copyright 2026 The cstar-workbench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cstar/verdict.hpp"

// Finite category machinery with exhaustive law checking. Objects are
// canonical string ids; morphisms carry explicit element tables, and
// morphism equality is structural (same dom, cod and table). Enumerations
// that would explode throw SizeBoundError instead of silently truncating.

namespace cstar::cat {

class SizeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration cap shared by hom-set and element realizations.
inline constexpr long kEnumerationCap = 2'000'000;

using Obj = std::string;

/// A morphism as a table from the elements of its domain to lists of
/// elements of its codomain. Plain functions use singleton lists; relation
/// categories use sorted lists. Value type with structural equality.
struct Mor {
  Obj dom, cod;
  std::map<std::string, std::vector<std::string>> table;

  bool operator==(const Mor& other) const = default;
};

nlohmann::json mor_to_json(const Mor& m);

/// An enumerable category: a carrier of objects for law checking, element
/// realization for any valid object id, hom-set enumeration, identities and
/// composition. Instances are immutable once built.
struct FiniteCategory {
  std::string name;
  std::vector<Obj> objects;
  std::function<std::vector<std::string>(const Obj&)> elements;
  std::function<std::vector<Mor>(const Obj&, const Obj&)> homs;
  std::function<Mor(const Obj&)> identity;
  std::function<Mor(const Mor&, const Mor&)> compose;  // compose(g, f) = g after f
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

struct FunctorData {
  std::string name;
  CategoryPtr src, dst;
  std::function<Obj(const Obj&)> on_obj;
  std::function<Mor(const Mor&)> on_mor;
};

/// An adjunction F -| U with F: C -> D, unit eta_X: X -> UFX in C and
/// counit eps_D: FUD -> D in D.
struct AdjunctionData {
  std::string name;
  CategoryPtr C, D;
  FunctorData F, U;
  std::function<Mor(const Obj&)> unit;
  std::function<Mor(const Obj&)> counit;
};

/// The monad T = UF of an adjunction, with mult_X = U(eps_{FX}).
struct MonadData {
  CategoryPtr C;
  std::function<Obj(const Obj&)> endo_obj;
  std::function<Mor(const Mor&)> endo_mor;
  std::function<Mor(const Obj&)> unit;
  std::function<Mor(const Obj&)> mult;
};

/// The Kleisli category of a monad together with the monad it came from.
/// Objects are the base objects; a morphism X -> Y is stored with Kleisli
/// dom/cod tags and a table into the elements of TY.
struct KleisliData {
  MonadData monad;
  CategoryPtr category;

  /// Reinterpret a Kleisli morphism as the underlying base morphism
  /// X -> TY.
  Mor untag(const Mor& kleisli_mor) const;
  /// Tag a base morphism X -> TY as a Kleisli morphism X -> Y.
  Mor tag(const Mor& base_mor, const Obj& kleisli_cod) const;
};

// ---------------------------------------------------------------------------
// Constructions

/// The raw monad data T = UF, unit = eta, mult_X = U(eps_{FX}), without law
/// verification.
MonadData monad_data(const AdjunctionData& adj);

/// Monad of an adjunction; throws std::runtime_error naming the failing
/// object when a monad law does not hold on the carrier.
MonadData monad_from_adjunction(const AdjunctionData& adj);

KleisliData kleisli(const MonadData& monad);

/// V: C -> Kl, identity on objects, f |-> eta o f.
FunctorData functor_V(const AdjunctionData& adj, const KleisliData& kl);
/// G: Kl -> C, X |-> TX, f |-> mult o Tf.
FunctorData functor_G(const AdjunctionData& adj, const KleisliData& kl);
/// The adjunction V -| G with unit eta and counit id_{TY} read as a Kleisli
/// morphism TY -> Y.
AdjunctionData kleisli_adjunction(const AdjunctionData& adj, const KleisliData& kl);

/// The comparison functor L: Kl -> D, X |-> FX, f |-> eps_{FY} o F(f).
FunctorData comparison_L(const AdjunctionData& adj, const KleisliData& kl);

/// Injectivity and surjectivity of the object map over the carriers. A
/// failing verdict lists the missed and duplicated objects.
Verdict check_bijective_on_objects(const FunctorData& f);

struct InverseKResult {
  Verdict bijective;                // precondition: F bijective on objects
  std::optional<FunctorData> K;    // present only when bijective
  Verdict kl_round_trip;           // K o L = id on Kleisli morphisms
  Verdict lk_round_trip;           // L o K = id on D morphisms
};

/// The inverse K: D -> Kl of the comparison functor, D |-> the unique C with
/// FC = D and g |-> Ug o eta. When F is not bijective on objects no K is
/// returned and the bijectivity verdict carries the witness.
InverseKResult inverse_K(const AdjunctionData& adj, const KleisliData& kl);

/// Whether L is an isomorphism: bijective on objects over the carriers and
/// bijective on every carrier hom-set.
Verdict comparison_is_isomorphism(const AdjunctionData& adj, const KleisliData& kl);

// ---------------------------------------------------------------------------
// Law suites (exhaustive over the carriers)

/// Identity and associativity laws over all composable pairs/triples.
std::vector<NamedVerdict> verify_category(const FiniteCategory& cat);

/// Identity and composition preservation over the source carrier.
Verdict verify_functor(const FunctorData& f);

/// Naturality of unit and counit plus both triangle identities.
std::vector<NamedVerdict> verify_adjunction(const AdjunctionData& adj);

/// Unit laws and associativity of the multiplication, per carrier object.
std::vector<NamedVerdict> verify_monad(const MonadData& monad);

/// U o L = G and L o V = F, morphism by morphism.
std::vector<NamedVerdict> verify_comparison_equations(const AdjunctionData& adj,
                                                      const KleisliData& kl);

/// Brute-force search over functor candidates Kl -> D on the given
/// sub-carrier: counts functors satisfying U o L' = G and L' o V = F and
/// passes iff exactly one exists.
Verdict comparison_uniqueness(const AdjunctionData& adj, const KleisliData& kl,
                              const std::vector<Obj>& sub_carrier);

/// Kleisli composition computed as mult o Tg o f coincides with the
/// transpose path U(adjunct of g) o f for every composable pair.
Verdict kleisli_transpose_consistency(const AdjunctionData& adj, const KleisliData& kl);

/// G o V = T on objects and morphisms.
Verdict verify_gv_equals_monad(const AdjunctionData& adj, const KleisliData& kl);

/// The whole battery for one adjunction: category laws on both sides,
/// adjunction and monad laws, Kleisli category laws, V/G/L functor laws and
/// equations, V -| G triangle identities, comparison uniqueness on the
/// sub-carrier, bijectivity, round trips, the isomorphism verdict and the
/// biconditional (L iso <=> F bijective on objects).
std::vector<NamedVerdict> full_law_suite(const AdjunctionData& adj,
                                         const std::vector<Obj>& uniqueness_subcarrier);

}  // namespace cstar::cat
