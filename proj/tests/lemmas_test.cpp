#include <gtest/gtest.h>

#include <algorithm>

#include "henson/enumerate.hpp"
#include "henson/family.hpp"
#include "henson/lemmas.hpp"
#include "oracles.hpp"

using namespace henson;

namespace {

constexpr TwoType N = TwoType::N;
constexpr TwoType E = TwoType::E;
constexpr TwoType S = TwoType::EStar;

std::vector<ForbiddenSet> sample_sets() {
  return {
      ForbiddenSet({Tournament::cycle3()}),
      ForbiddenSet({Tournament::transitive(3)}),
      ForbiddenSet({Tournament::cycle3(), Tournament::transitive(3)}),
      ForbiddenSet({make_In(6)}),
  };
}

const CaseReport& report_for(const std::vector<CaseReport>& reports, const Behavior& b) {
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [&](const CaseReport& r) { return r.context.behavior == b; });
  EXPECT_NE(it, reports.end());
  return *it;
}

std::size_t count_verdict(const std::vector<CaseReport>& reports, Verdict v) {
  return static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(), [&](const CaseReport& r) { return r.verdict == v; }));
}

}  // namespace

TEST(LemmaNames, RoundTrip) {
  for (Lemma l : {Lemma::NoConstants, Lemma::OneOrbit, Lemma::XLessThanY, Lemma::XYInterdense,
                  Lemma::Constants}) {
    EXPECT_EQ(parse_lemma(to_string(l)), l);
  }
  EXPECT_EQ(parse_lemma("L-noconstants"), Lemma::NoConstants);
  EXPECT_FALSE(parse_lemma("L-nothing").has_value());
}

TEST(NoConstants, CycleExamples) {
  const ForbiddenSet t({Tournament::cycle3()});
  const auto reports = verify_lemma_table(Lemma::NoConstants, t);
  ASSERT_EQ(reports.size(), 27U);

  const CaseReport& restore = report_for(reports, Behavior::make(E, E, S));
  EXPECT_EQ(restore.verdict, Verdict::Impossible);
  ASSERT_TRUE(restore.certificate);
  const auto& w = restore.certificate->witness.digraph();
  EXPECT_EQ(w.size(), 3U);
  EXPECT_EQ(w.edge_count(), 2U);
  EXPECT_TRUE(oracle::isomorphic(restore.certificate->image, Tournament::cycle3().digraph()));

  const CaseReport& cycle = report_for(reports, Behavior::make(E, S, N));
  EXPECT_EQ(cycle.verdict, Verdict::Impossible);
  ASSERT_TRUE(cycle.certificate);
  EXPECT_EQ(cycle.certificate->kind, CertificateKind::PowerIdentity);
  EXPECT_EQ(cycle.certificate->power, 3U);

  EXPECT_EQ(report_for(reports, Behavior::minus()).verdict, Verdict::GeneratesMinus);
  EXPECT_EQ(report_for(reports, Behavior::identity()).verdict, Verdict::Identity);
}

TEST(NoConstants, TableShape) {
  for (const ForbiddenSet& t : sample_sets()) {
    const auto reports = verify_lemma_table(Lemma::NoConstants, t);
    ASSERT_EQ(reports.size(), 27U);
    EXPECT_EQ(count_verdict(reports, Verdict::Identity), 1U);
    EXPECT_EQ(count_verdict(reports, Verdict::GeneratesMinus) > 0, closed_under_minus(t));
    for (std::size_t i = 0; i < reports.size(); ++i) {
      EXPECT_EQ(reports[i].context.behavior.index(), i);
      EXPECT_FALSE(reports[i].clause.empty());
      EXPECT_TRUE(reverify(reports[i], t)) << reports[i].context.to_string();
    }
  }
}

TEST(NoConstants, EdgeRestoringShapesAreImpossible) {
  const Behavior shapes[] = {Behavior::make(E, E, S), Behavior::make(E, S, E),
                             Behavior::make(E, S, N), Behavior::make(E, N, S)};
  for (const ForbiddenSet& t : sample_sets()) {
    const auto reports = verify_lemma_table(Lemma::NoConstants, t);
    for (const Behavior& b : shapes) {
      for (const Behavior& c : {b, dual(b)}) {
        const CaseReport& r = report_for(reports, c);
        EXPECT_EQ(r.verdict, Verdict::Impossible) << c.to_string();
        ASSERT_TRUE(r.certificate);
        EXPECT_TRUE(in_forb(r.certificate->witness.digraph(), t));
        EXPECT_FALSE(in_forb(r.certificate->image, t));
      }
    }
  }
}

TEST(NoConstants, DualBehavioursShareHardVerdicts) {
  for (const ForbiddenSet& t : sample_sets()) {
    const auto reports = verify_lemma_table(Lemma::NoConstants, t);
    for (const CaseReport& r : reports) {
      if (r.verdict != Verdict::Impossible && r.verdict != Verdict::FullSym) continue;
      EXPECT_EQ(report_for(reports, dual(r.context.behavior)).verdict, r.verdict)
          << r.context.to_string();
    }
  }
}

TEST(NoConstants, ConstantBehavioursCollapse) {
  const ForbiddenSet t({Tournament::cycle3()});
  const auto reports = verify_lemma_table(Lemma::NoConstants, t);
  EXPECT_EQ(report_for(reports, Behavior::make(E, E, E)).verdict, Verdict::FullSym);
  EXPECT_EQ(report_for(reports, Behavior::make(N, N, N)).verdict, Verdict::FullSym);
}

TEST(NoConstants, CertificatesOnAllFourVertexSets) {
  for (const Tournament& m : tournaments_up_to_iso(4)) {
    const ForbiddenSet t({m});
    for (const CaseReport& r : verify_lemma_table(Lemma::NoConstants, t)) {
      EXPECT_TRUE(reverify(r, t)) << r.context.to_string();
    }
  }
}

TEST(OneOrbit, MatchesNoConstantsVerdicts) {
  for (const ForbiddenSet& t : sample_sets()) {
    const auto plain = verify_lemma_table(Lemma::NoConstants, t);
    const auto orbit = verify_lemma_table(Lemma::OneOrbit, t);
    ASSERT_EQ(orbit.size(), 27U);
    for (std::size_t i = 0; i < 27; ++i) {
      EXPECT_EQ(orbit[i].context.kind, ContextKind::OneIndependentOrbit);
      EXPECT_EQ(orbit[i].verdict, plain[i].verdict);
      EXPECT_TRUE(reverify(orbit[i], t));
    }
  }
}

TEST(XLessThanY, SwitchIffClosed) {
  for (const ForbiddenSet& t : sample_sets()) {
    const auto reports = verify_lemma_table(Lemma::XLessThanY, t);
    ASSERT_EQ(reports.size(), 54U);
    EXPECT_EQ(count_verdict(reports, Verdict::GeneratesSw) > 0, closed_under_sw(t));
    for (std::size_t i = 0; i < reports.size(); ++i) {
      EXPECT_EQ(reports[i].context.order, i < 27 ? OrbitOrder::Below : OrbitOrder::Above);
      EXPECT_TRUE(reverify(reports[i], t)) << reports[i].context.to_string();
    }
  }
}

TEST(XLessThanY, StarCertificatesRealizeOverConstants) {
  const ForbiddenSet t({Tournament::cycle3()});
  for (const CaseReport& r : verify_lemma_table(Lemma::XLessThanY, t)) {
    if (r.verdict != Verdict::Impossible) continue;
    ASSERT_TRUE(r.certificate);
    ASSERT_TRUE(r.certificate->center.has_value());
    if (r.certificate->realization) {
      EXPECT_TRUE(in_forb(r.certificate->realization->amalgam.digraph, t));
    }
  }
}

TEST(XYInterdense, AllPairsReverify) {
  for (const ForbiddenSet& t :
       {ForbiddenSet({Tournament::cycle3()}),
        ForbiddenSet({Tournament::cycle3(), Tournament::transitive(3)})}) {
    const auto reports = verify_lemma_table(Lemma::XYInterdense, t);
    ASSERT_EQ(reports.size(), 729U);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const CaseReport& r = reports[i];
      ASSERT_TRUE(r.context.above);
      EXPECT_EQ(r.context.behavior.index(), i / 27);
      EXPECT_EQ(r.context.above->index(), i % 27);
      EXPECT_TRUE(reverify(r, t)) << r.context.to_string();
    }
  }
}

TEST(Constants, OffOrbitRowsFollowTheStarRows) {
  for (const ForbiddenSet& t : sample_sets()) {
    const auto reports = verify_lemma_table(Lemma::Constants, t);
    ASSERT_EQ(reports.size(), 33U);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      EXPECT_EQ(reports[i].context.kind, ContextKind::ConstantStar);
      EXPECT_EQ(reports[i].context.off_orbit.has_value(), i >= 27);
      EXPECT_TRUE(reverify(reports[i], t)) << reports[i].context.to_string();
    }
  }
}

TEST(Reverify, RejectsTamperedCertificate) {
  const ForbiddenSet t({Tournament::cycle3()});
  auto reports = verify_lemma_table(Lemma::NoConstants, t);
  CaseReport r = report_for(reports, Behavior::make(E, E, S));
  ASSERT_TRUE(reverify(r, t));
  r.certificate->image = Tournament::transitive(3).digraph();
  EXPECT_FALSE(reverify(r, t));
  CaseReport s = report_for(reports, Behavior::make(E, E, S));
  s.certificate->witness = OrderedDigraph(Tournament::cycle3().digraph());
  EXPECT_FALSE(reverify(s, t));
}
