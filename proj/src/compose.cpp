#include "plab/compose.hpp"

#include <deque>
#include <stdexcept>

namespace plab {

namespace {

Pol pair_polarity(const Game& a, const Game& b) {
  return (game_polarity(a) == Pol::P && game_polarity(b) == Pol::P) ? Pol::P : Pol::O;
}

// The interaction state.  Each strategy keeps its own view of the games it
// plays on; the composite keeps separate views of the external games that
// advance only when a move is actually exchanged with the environment.
struct Interaction {
  StrategyTree ssig, stau;
  Game gXs, gMs;  // sigma's view of X and M
  Game gMt, gYt;  // tau's view of dual-M and Y
  Game gXc, gYc;  // composite's view of X and Y
  std::deque<Move> buf_sig_X, buf_sig_M;  // inputs waiting for sigma
  std::deque<Move> buf_tau_M, buf_tau_Y;  // inputs waiting for tau
  std::deque<std::pair<bool, Move>> pending_out;  // decided external moves; true = X side

  // Feeds buffered inputs and drains decided outputs until neither strategy
  // can take another internal step.
  void settle() {
    bool progress = true;
    while (progress) {
      progress = false;

      if (ssig->kind == SKind::Out) {
        const Move& m = ssig->move;
        switch (m->kind) {
          case MKind::SideL:
            pending_out.emplace_back(true, m->a);
            gXs = game_child(gXs, m->a);
            break;
          case MKind::SideR:
            buf_tau_M.push_back(m->a);
            gMs = game_child(gMs, m->a);
            break;
          case MKind::Pair:
            pending_out.emplace_back(true, m->a);
            gXs = game_child(gXs, m->a);
            buf_tau_M.push_back(m->b);
            gMs = game_child(gMs, m->b);
            break;
          case MKind::Base:
            throw std::logic_error("base move at pairing level");
        }
        ssig = ssig->next;
        progress = true;
        continue;
      }

      if (stau->kind == SKind::Out) {
        const Move& m = stau->move;
        switch (m->kind) {
          case MKind::SideL:
            buf_sig_M.push_back(m->a);
            gMt = game_child(gMt, m->a);
            break;
          case MKind::SideR:
            pending_out.emplace_back(false, m->a);
            gYt = game_child(gYt, m->a);
            break;
          case MKind::Pair:
            buf_sig_M.push_back(m->a);
            gMt = game_child(gMt, m->a);
            pending_out.emplace_back(false, m->b);
            gYt = game_child(gYt, m->b);
            break;
          case MKind::Base:
            throw std::logic_error("base move at pairing level");
        }
        stau = stau->next;
        progress = true;
        continue;
      }

      if (ssig->kind == SKind::In) {
        Pol px = game_polarity(gXs), pm = game_polarity(gMs);
        if (px == Pol::O && pm == Pol::P && !buf_sig_X.empty()) {
          Move m = buf_sig_X.front();
          buf_sig_X.pop_front();
          gXs = game_child(gXs, m);
          ssig = ssig->branches.at(m_sideL(m));
          progress = true;
          continue;
        }
        if (px == Pol::P && pm == Pol::O && !buf_sig_M.empty()) {
          Move m = buf_sig_M.front();
          buf_sig_M.pop_front();
          gMs = game_child(gMs, m);
          ssig = ssig->branches.at(m_sideR(m));
          progress = true;
          continue;
        }
        if (px == Pol::O && pm == Pol::O && !buf_sig_X.empty() && !buf_sig_M.empty()) {
          Move mx = buf_sig_X.front(), mm = buf_sig_M.front();
          buf_sig_X.pop_front();
          buf_sig_M.pop_front();
          gXs = game_child(gXs, mx);
          gMs = game_child(gMs, mm);
          ssig = ssig->branches.at(m_pair(mx, mm));
          progress = true;
          continue;
        }
      }

      if (stau->kind == SKind::In) {
        Pol pm = game_polarity(gMt), py = game_polarity(gYt);
        if (pm == Pol::O && py == Pol::P && !buf_tau_M.empty()) {
          Move m = buf_tau_M.front();
          buf_tau_M.pop_front();
          gMt = game_child(gMt, m);
          stau = stau->branches.at(m_sideL(m));
          progress = true;
          continue;
        }
        if (pm == Pol::P && py == Pol::O && !buf_tau_Y.empty()) {
          Move m = buf_tau_Y.front();
          buf_tau_Y.pop_front();
          gYt = game_child(gYt, m);
          stau = stau->branches.at(m_sideR(m));
          progress = true;
          continue;
        }
        if (pm == Pol::O && py == Pol::O && !buf_tau_M.empty() && !buf_tau_Y.empty()) {
          Move mm = buf_tau_M.front(), my = buf_tau_Y.front();
          buf_tau_M.pop_front();
          buf_tau_Y.pop_front();
          gMt = game_child(gMt, mm);
          gYt = game_child(gYt, my);
          stau = stau->branches.at(m_pair(mm, my));
          progress = true;
          continue;
        }
      }
    }

    // Sanity: the two strategies can never both be due to move at once, since
    // the interface game is owned by one of them at any position.
    if (pair_polarity(gXs, gMs) == Pol::P && pair_polarity(gMt, gYt) == Pol::P &&
        !(expand(gXs)->children.empty() && expand(gMs)->children.empty()) &&
        !(expand(gMt)->children.empty() && expand(gYt)->children.empty()))
      throw std::logic_error("both strategies own the move after settling");
  }

  StrategyTree resume() {
    settle();
    Pol px = game_polarity(gXc), py = game_polarity(gYc);
    Game ex = expand(gXc), ey = expand(gYc);
    if (px == Pol::P && py == Pol::P) {
      bool dead = ex->children.empty() && ey->children.empty();
      if (!dead) {
        if (pending_out.empty())
          throw std::runtime_error(
              "deadlock: the composite must move but neither strategy decided a move");
        auto [on_x, m] = pending_out.front();
        pending_out.pop_front();
        if (on_x) {
          gXc = game_child(gXc, m);
          return s_out(m_sideL(m), resume());
        }
        gYc = game_child(gYc, m);
        return s_out(m_sideR(m), resume());
      }
      if (!pending_out.empty())
        throw std::logic_error("decided moves left over at a finished position");
      return s_stop();
    }
    // Composite owned by the environment: branch over its legal moves.
    BranchMap branches;
    if (px == Pol::O && py == Pol::P) {
      for (const auto& [m, sub] : ex->children) {
        Interaction next = *this;
        next.buf_sig_X.push_back(m);
        next.gXc = sub;
        branches[m_sideL(m)] = next.resume();
      }
    } else if (px == Pol::P && py == Pol::O) {
      for (const auto& [m, sub] : ey->children) {
        Interaction next = *this;
        next.buf_tau_Y.push_back(m);
        next.gYc = sub;
        branches[m_sideR(m)] = next.resume();
      }
    } else {
      for (const auto& [mx, subx] : ex->children)
        for (const auto& [my, suby] : ey->children) {
          Interaction next = *this;
          next.buf_sig_X.push_back(mx);
          next.gXc = subx;
          next.buf_tau_Y.push_back(my);
          next.gYc = suby;
          branches[m_pair(mx, my)] = next.resume();
        }
    }
    if (branches.empty() && !pending_out.empty())
      throw std::logic_error("decided moves left over at a finished position");
    return s_in(std::move(branches));
  }
};

}  // namespace

StrategyTree compose_blass(const StrategyTree& sigma, const Game& gX, const Game& gM,
                           const StrategyTree& tau, const Game& gY) {
  Interaction st;
  st.ssig = sigma;
  st.stau = tau;
  st.gXs = gX;
  st.gMs = gM;
  st.gMt = dualize(gM);
  st.gYt = gY;
  st.gXc = gX;
  st.gYc = gY;
  return st.resume();
}

}  // namespace plab
