#include "qpe/fixtures.hpp"

#include <array>

namespace qpe::fixtures {

Graph petersen() {
  // nodes = 2-subsets of {0..4}, adjacent iff disjoint
  std::array<std::pair<int, int>, 10> subsets;
  int idx = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets[idx++] = {a, b};
  Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

Graph rook_4x4() {
  Graph g(16);
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b)
      if (a / 4 == b / 4 || a % 4 == b % 4) g.add_edge(a, b);
  return g;
}

Graph shrikhande() {
  Graph g(16);
  auto idx = [](int x, int y) { return ((x % 4 + 4) % 4) * 4 + ((y % 4 + 4) % 4); };
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      int a = idx(x, y);
      for (auto [dx, dy] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
        g.add_edge(a, idx(x + dx, y + dy));
      }
    }
  }
  return g;
}

namespace {

// data/srg/srg-25-12-5-6.g6, generated by tools/srg_families.cpp
constexpr const char* kSrg25[] = {
    "X??xuR_sAvTetcZSU[BTflUYY|E]LBj[@rTffW|QxxsTZrGxir_",
    "X??|mYs[ziXsV[eJ{CUcVtrIjRlZPbSyn`|?ULIsu_dlouDMAZN",
    "X?@\\RagsElMVfdxLFfB[bYtivHlbdeRpO|f@esT^MSfXkXoUzCd",
    "X?@\\TPosEmMZfdxTFjB[bYljHqU\\QTlE_|fExYjSrbUUVEsUzDQ",
    "X?@]mhrjLVM?wke[FoZYTYZYtUlcZeSNO}{@eRd^IifXr`oULsd",
    "X?AqtROYEZ[U\\SNgRYE[uxpXri`ryCxlAu[uVratVMiYM^OZMZO",
    "X?BQ}T\\ekwXBlL[Y{rHu]NaAlgtUfRXK^fEWk[BJchilFlEsRQu",
    "X?BTP}hZjOFblq[d{km]XqaxXjQ}_SpJ^cyFkbCzbPSrfp@skTF",
    "X?Bb]TlilWXBUqfdfKmhes\\@qSrh^Tes[wyWVbBKzPiuwLEwRlH",
    "X]NNKwNWt@jbBd]?vTmlU?gxkkK_[yfhShzR`VyDuc[INJbxOR{",
    "X]owkc@cl\\TmaYlMCwW[l{qdaybBJqzFBWRu\\LfQTquJ|_sytHQ",
    "Xrdlu@RoGEtmHEEQPUYwyVmbNIpf[n_fdtbcHn[NMQQ`k|XmVqG",
    "X~KxEWQ`[hBqTyiajDdNpPr_kxJKnbV@xHrear]KvmAWBlx{lBK",
    "X~aKeEbQqsTxHkXJDMjQ{Ldu\\_Wm\\?trWwiuPYtqib\\XvWD~Cgs",
    "X~~EHk^J|GiXIZcjhb{iWQhddAx`q{Sb}KiWWfAlEEJicKvETK^",
};

// data/srg/srg-26-10-3-4.g6
constexpr const char* kSrg26[] = {
    "Y??@YgwTBOQdMUkKPk?{rqKjIPDG|LMEQZECwQ[IZYIM[CoXlAKsbEP?",
    "Y??@YhSMBOQbMYkKPi?|RqKjI`BHxJMaPZSCwQ[KY]IUWSohhaKsbEP?",
    "Y??EdQgpCgLBpYRKMIFDRLKgu`CpxKuaQfSCFQ[Ja]IHwSoUhaKJbEP?",
    "Y??EdRCiCgLDpURKMKFCrLKguPAo|IuEPfECFQ[LbYIP{CoelAKJbEP?",
    "Y?AqtROYEZ[U\\SNgRY@bHEMaKTEKDBEQ@HbUgKYqgpiDpbOcpbO??F~_",
    "Y?BxQ_{SCfqCNSQppLGs`KpFMWL?n\\ES@_orxOMARGZPAqJWnODt`SW?",
    "Y?BxQbBSJXQ@o`lCpGOtvrCGpK|@xDFAY^c?EdAqQ]AmwSQWdbGISWi_",
    "Y?{HIwogz?kWKRmHOm_kZoHjADDWTI`PmRQDDgbaJqGo`ZDZgAXueEC?",
    "YwCepV{KqMUBLOb_iE[R?TaeEP@WirQCIOE\\_R{A?`}h@k[@]LHFJ@U?",
    "YwFX@ZyLQAHKKpa@tHB_uSBi?TpSbS`qUUAk`qoQKg[hpIS?~@XEiLE?",
};

std::vector<Graph> parse_all(const char* const* lines, size_t count) {
  std::vector<Graph> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(parse_graph6(lines[i]));
  return out;
}

}  // namespace

const std::vector<Graph>& srg_25_12_5_6() {
  static const std::vector<Graph> graphs = parse_all(kSrg25, std::size(kSrg25));
  return graphs;
}

const std::vector<Graph>& srg_26_10_3_4() {
  static const std::vector<Graph> graphs = parse_all(kSrg26, std::size(kSrg26));
  return graphs;
}

}  // namespace qpe::fixtures
