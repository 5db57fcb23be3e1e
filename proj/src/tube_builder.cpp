#include "wsstad/tube_builder.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <string>

namespace wsstad {

double linking_score(const ScoredBox& a, const ScoredBox& b, const LinkParams& params) {
  const double overlap = iou(a.box, b.box);
  if (overlap > params.lambda) return a.score + b.score + params.eta * overlap;
  return 0.0;
}

namespace {

std::string zero_pad(std::size_t n, int width = 3) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, n);
  return buf;
}

// Working pool over one video's detections. Boxes leave the pool when a
// finished tube consumes them, emitted or not.
struct Pool {
  std::vector<ScoredBox> dets;                         // canonically sorted
  std::vector<bool> alive;
  std::map<std::int64_t, std::vector<std::size_t>> by_frame;

  explicit Pool(std::vector<ScoredBox> input) : dets(std::move(input)) {
    std::sort(dets.begin(), dets.end(), [](const ScoredBox& a, const ScoredBox& b) {
      if (detection_before(a, b)) return true;
      if (detection_before(b, a)) return false;
      return a.score < b.score;
    });
    alive.assign(dets.size(), true);
    for (std::size_t i = 0; i < dets.size(); ++i) by_frame[dets[i].frame].push_back(i);
  }

  bool empty(const std::vector<std::size_t>& subset) const {
    return std::none_of(subset.begin(), subset.end(), [&](std::size_t i) { return alive[i]; });
  }

  // Highest score wins; ties fall back to the detection total order.
  std::size_t seed(const std::vector<std::size_t>& subset) const {
    std::size_t best = dets.size();
    for (std::size_t i : subset) {
      if (!alive[i]) continue;
      if (best == dets.size() || dets[i].score > dets[best].score ||
          (dets[i].score == dets[best].score && detection_before(dets[i], dets[best]))) {
        best = i;
      }
    }
    return best;
  }

  std::vector<std::size_t> alive_at(std::int64_t frame) const {
    std::vector<std::size_t> out;
    auto it = by_frame.find(frame);
    if (it == by_frame.end()) return out;
    for (std::size_t i : it->second)
      if (alive[i]) out.push_back(i);
    return out;
  }
};

}  // namespace

std::vector<Tube> build_unary_tubes(const std::vector<ScoredBox>& input,
                                    const LinkParams& params) {
  params.validate();
  std::vector<Tube> tubes;
  if (input.empty()) return tubes;
  Pool pool(input);
  const std::string video_id = pool.dets.front().video_id;

  std::map<std::string, std::vector<std::size_t>> by_category;
  for (std::size_t i = 0; i < pool.dets.size(); ++i)
    by_category[pool.dets[i].category].push_back(i);

  std::size_t emitted = 0;
  for (auto& [category, subset] : by_category) {
    while (!pool.empty(subset)) {
      const std::size_t seed = pool.seed(subset);
      std::map<std::int64_t, std::size_t> chain;  // frame -> detection index
      chain[pool.dets[seed].frame] = seed;

      // Extend one frame at a time, forward first, by maximal linking score
      // among gate-passing boxes of the same category still in the pool.
      for (int direction : {+1, -1}) {
        std::size_t cur = seed;
        std::int64_t t = pool.dets[seed].frame;
        for (;;) {
          std::size_t best = pool.dets.size();
          double best_score = 0;
          for (std::size_t j : pool.alive_at(t + direction)) {
            if (pool.dets[j].category != category) continue;
            if (iou(pool.dets[cur].box, pool.dets[j].box) <= params.lambda) continue;
            const double s = linking_score(pool.dets[cur], pool.dets[j], params);
            if (best == pool.dets.size() || s > best_score ||
                (s == best_score && detection_before(pool.dets[j], pool.dets[best]))) {
              best = j;
              best_score = s;
            }
          }
          if (best == pool.dets.size()) break;
          t += direction;
          chain[t] = best;
          cur = best;
        }
      }

      if (static_cast<std::int64_t>(chain.size()) >= params.zeta1) {
        Tube tube;
        tube.id = video_id + "/unary/" + zero_pad(emitted++);
        tube.video_id = video_id;
        tube.kind = TubeKind::unary;
        tube.category = category;
        for (const auto& [frame, idx] : chain) {
          tube.entries.push_back({frame, pool.dets[idx].box});
          tube.member_boxes.push_back({pool.dets[idx]});
        }
        tubes.push_back(std::move(tube));
      }
      for (const auto& [frame, idx] : chain) pool.alive[idx] = false;
    }
  }
  return tubes;
}

std::vector<Tube> build_multivariate_tubes(const std::vector<ScoredBox>& input,
                                           const LinkParams& params) {
  params.validate();
  std::vector<Tube> tubes;
  if (input.empty()) return tubes;
  Pool pool(input);
  const std::string video_id = pool.dets.front().video_id;

  std::vector<std::size_t> everything(pool.dets.size());
  for (std::size_t i = 0; i < everything.size(); ++i) everything[i] = i;

  std::size_t emitted = 0;
  while (!pool.empty(everything)) {
    const std::size_t seed = pool.seed(everything);
    const std::int64_t seed_frame = pool.dets[seed].frame;

    std::map<std::int64_t, std::vector<std::size_t>> clusters;
    auto& seed_cluster = clusters[seed_frame];
    seed_cluster.push_back(seed);
    // Single non-transitive pass: same-frame boxes join on IoU with the seed.
    for (std::size_t j : pool.alive_at(seed_frame)) {
      if (j != seed && iou(pool.dets[seed].box, pool.dets[j].box) > params.lambda)
        seed_cluster.push_back(j);
    }

    // A next-frame box joins if it passes the gate against any member of the
    // current frame's cluster; all joiners collapse to one union box.
    for (int direction : {+1, -1}) {
      std::int64_t t = seed_frame;
      for (;;) {
        const auto& current = clusters[t];
        std::vector<std::size_t> next;
        for (std::size_t j : pool.alive_at(t + direction)) {
          const bool passes = std::any_of(current.begin(), current.end(), [&](std::size_t i) {
            return iou(pool.dets[i].box, pool.dets[j].box) > params.lambda;
          });
          if (passes) next.push_back(j);
        }
        if (next.empty()) break;
        t += direction;
        clusters[t] = std::move(next);
      }
    }

    if (static_cast<std::int64_t>(clusters.size()) >= params.zeta2) {
      Tube tube;
      tube.id = video_id + "/mv/" + zero_pad(emitted++);
      tube.video_id = video_id;
      tube.kind = TubeKind::multivariate;
      for (const auto& [frame, members] : clusters) {
        std::vector<Box> boxes;
        std::vector<ScoredBox> scored;
        for (std::size_t i : members) {
          boxes.push_back(pool.dets[i].box);
          scored.push_back(pool.dets[i]);
        }
        tube.entries.push_back({frame, union_box(boxes)});
        tube.member_boxes.push_back(std::move(scored));
      }
      tubes.push_back(std::move(tube));
    }
    for (const auto& [frame, members] : clusters)
      for (std::size_t i : members) pool.alive[i] = false;
  }
  return tubes;
}

std::vector<Tube> build_all_tubes(const std::vector<ScoredBox>& dets,
                                  const LinkParams& params) {
  std::vector<Tube> tubes = build_unary_tubes(dets, params);
  std::vector<Tube> mv = build_multivariate_tubes(dets, params);
  tubes.insert(tubes.end(), std::make_move_iterator(mv.begin()),
               std::make_move_iterator(mv.end()));
  return tubes;
}

}  // namespace wsstad
