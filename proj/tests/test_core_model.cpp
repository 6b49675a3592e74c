#include <doctest.h>

#include "tms/core_model.hpp"
#include "test_util.hpp"

using namespace tms;

TEST_CASE("registered device starts pristine") {
    EngineState state;
    state.users.register_user("alice", true);
    const DeviceState& d = state.register_device("d1", UserId("alice"), SeverityLevel::Normal);
    CHECK(d.sbt_i == 1.0);
    CHECK(d.bbt_c == 1.0);
    CHECK(d.bbt_n == 1.0);
    CHECK(d.bbt_m == 1.0);
    CHECK(d.prc == 0.0);
    CHECK(d.vulnerabilities.empty());
    CHECK(d.owner == UserId("alice"));
}

TEST_CASE("duplicate device registration rejected") {
    EngineState state;
    state.users.register_user("alice", true);
    state.register_device("d1", UserId("alice"), SeverityLevel::Normal);
    check_throws_code(ErrorCode::DuplicateDevice, [&] {
        state.register_device("d1", UserId("alice"), SeverityLevel::Minor);
    });
}

TEST_CASE("unknown owner is a first-class state") {
    EngineState state;
    const DeviceState& d = state.register_device("d2", std::nullopt, SeverityLevel::Minor);
    CHECK_FALSE(d.owner.has_value());
}

TEST_CASE("device registration requires a registered owner") {
    EngineState state;
    check_throws_code(ErrorCode::UnknownUser, [&] {
        state.register_device("d1", UserId("ghost"), SeverityLevel::Normal);
    });
}

TEST_CASE("device lookup of unregistered id fails") {
    EngineState state;
    check_throws_code(ErrorCode::UnknownDevice, [&] { state.device("nope"); });
}

TEST_CASE("user trust is directed and not transitive") {
    UserTrustGraph graph;
    graph.register_user("alice", true);
    graph.register_user("bob", true);
    graph.register_user("carol", true);

    graph.assert_trust("alice", "bob", 0.8);
    CHECK(graph.trust("alice", "bob") == 0.8);
    CHECK_FALSE(graph.trust("bob", "alice").has_value());

    graph.assert_trust("bob", "carol", 0.9);
    CHECK_FALSE(graph.trust("alice", "carol").has_value());
}

TEST_CASE("user trust assertion validation") {
    UserTrustGraph graph;
    graph.register_user("alice", true);
    graph.register_user("bob", true);

    check_throws_code(ErrorCode::OutOfRange, [&] { graph.assert_trust("alice", "bob", 1.5); });
    check_throws_code(ErrorCode::OutOfRange, [&] { graph.assert_trust("alice", "bob", -0.1); });
    check_throws_code(ErrorCode::SelfAssertion, [&] { graph.assert_trust("alice", "alice", 0.5); });
    check_throws_code(ErrorCode::UnknownUser, [&] { graph.assert_trust("alice", "ghost", 0.5); });
}

TEST_CASE("re-assertion overwrites the previous level") {
    UserTrustGraph graph;
    graph.register_user("alice", true);
    graph.register_user("bob", true);
    graph.assert_trust("alice", "bob", 0.8);
    graph.assert_trust("alice", "bob", 0.3);
    CHECK(graph.trust("alice", "bob") == 0.3);
}

TEST_CASE("duplicate user registration rejected") {
    UserTrustGraph graph;
    graph.register_user("alice", true);
    check_throws_code(ErrorCode::DuplicateUser, [&] { graph.register_user("alice", false); });
}

TEST_CASE("topology rejects self-loops, removal is idempotent") {
    TopologyGraph topo;
    check_throws_code(ErrorCode::SelfLink, [&] { topo.add_link("d1", "d1"); });
    topo.add_link("d1", "d2");
    topo.add_link("d1", "d2"); // set semantics
    CHECK(topo.neighbors("d1").size() == 1);
    topo.remove_link("d1", "d3"); // absent: no-op
    topo.remove_link("d1", "d2");
    CHECK(topo.neighbors("d1").empty());
    CHECK(topo.neighbors("unseen").empty());
}

TEST_CASE("params: defaults validate") {
    EngineParams params;
    CHECK_NOTHROW(params.validate());
}

TEST_CASE("params: weight constraints enforced") {
    EngineParams params;

    SUBCASE("sum must be 1") {
        params.w_s = 0.4;
        check_throws_code(ErrorCode::InvalidParams, [&] { params.validate(); });
    }
    SUBCASE("behaviour weight must dominate status") {
        params.w_s = 0.5;
        params.w_b = 0.3;
        params.w_a = 0.2;
        check_throws_code(ErrorCode::InvalidParams, [&] { params.validate(); });
    }
    SUBCASE("behaviour weight must dominate risk") {
        params.w_s = 0.2;
        params.w_b = 0.4;
        params.w_a = 0.4;
        check_throws_code(ErrorCode::InvalidParams, [&] { params.validate(); });
    }
    SUBCASE("equality is not domination") {
        params.w_s = 0.35;
        params.w_b = 0.35;
        params.w_a = 0.3;
        check_throws_code(ErrorCode::InvalidParams, [&] { params.validate(); });
    }
}

TEST_CASE("params: ut ordering and threshold shape") {
    EngineParams params;

    SUBCASE("ut_known below ut_unknown") {
        params.ut_known = 0.1;
        params.ut_unknown = 0.2;
        check_throws_code(ErrorCode::InvalidParams, [&] { params.validate(); });
    }
    SUBCASE("thresholds must ascend") {
        params.prob_thresholds = {0.2, 0.2, 0.6, 0.8};
        check_throws_code(ErrorCode::InvalidParams, [&] { params.validate(); });
    }
    SUBCASE("thresholds must stay inside (0,1)") {
        params.prob_thresholds = {0.2, 0.4, 0.6, 1.0};
        check_throws_code(ErrorCode::InvalidParams, [&] { params.validate(); });
    }
    SUBCASE("negative restoration rate") {
        params.tsrr_compliance = -0.1;
        check_throws_code(ErrorCode::InvalidParams, [&] { params.validate(); });
    }
}
