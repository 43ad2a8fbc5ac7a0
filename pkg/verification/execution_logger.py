"""
Callback Handler for Suite Runs
===============================
记录验证套件执行过程中的详细日志
"""

import logging
from typing import Dict, List

from verification.report import IdentityReport, Status

logger = logging.getLogger(__name__)


class SuiteCallbackHandler:
    """Hooks called by run_suite; every method is a no-op by default"""

    def on_suite_start(self, suite_name: str, identity_ids: List[str]) -> None:
        pass

    def on_check_start(self, identity_id: str) -> None:
        pass

    def on_report(self, report: IdentityReport) -> None:
        pass

    def on_check_end(self, identity_id: str, reports: List[IdentityReport]) -> None:
        pass

    def on_check_error(self, identity_id: str, error: Exception) -> None:
        pass

    def on_suite_finish(self, reports: List[IdentityReport]) -> None:
        pass


class SuiteExecutionLogger(SuiteCallbackHandler):
    """自定义回调处理器，用于记录每个恒等式检查的执行过程"""

    def __init__(self):
        self.step_count = 0
        self.check_results: List[Dict] = []

    def on_suite_start(self, suite_name: str, identity_ids: List[str]) -> None:
        """套件开始时"""
        logger.info("=" * 80)
        logger.info(f"🧪 验证套件开始: {suite_name}")
        logger.info(f"📋 恒等式数量: {len(identity_ids)}")

    def on_check_start(self, identity_id: str) -> None:
        """单个恒等式检查开始时"""
        self.step_count += 1
        logger.info("-" * 80)
        logger.info(f"🔧 检查 #{self.step_count}: {identity_id}")

    def on_report(self, report: IdentityReport) -> None:
        if report.status is Status.FAIL and not report.expected_fail:
            logger.warning(f"⚠️ {report.identity_id} {dict(report.params)} 失败: {report.witness}")
        else:
            logger.debug(f"📝 {report.identity_id} {dict(report.params)} -> {report.status.value}")

    def on_check_end(self, identity_id: str, reports: List[IdentityReport]) -> None:
        """单个恒等式检查结束时"""
        counts = {status: sum(1 for r in reports if r.status is status) for status in Status}
        unexpected = sum(1 for r in reports if r.unexpected_failure)
        self.check_results.append({
            "identity_id": identity_id,
            "step": self.step_count,
            "points": len(reports),
            "unexpected": unexpected,
        })
        logger.info(
            f"📤 {identity_id}: {counts[Status.PASS]} pass, {counts[Status.FAIL]} fail, "
            f"{counts[Status.SKIPPED]} skipped"
        )
        if unexpected:
            logger.error(f"❌ {identity_id}: {unexpected} 个非预期失败")
        else:
            logger.info("✅ 检查完成")

    def on_check_error(self, identity_id: str, error: Exception) -> None:
        """检查生成器本身出错时"""
        logger.error(f"❌ 检查执行失败: {identity_id}: {error}")

    def on_suite_finish(self, reports: List[IdentityReport]) -> None:
        """套件完成时"""
        logger.info("=" * 80)
        logger.info("🏁 验证套件完成")
        logger.info(f"📊 总步骤数: {self.step_count}")
        logger.info(f"🔢 参数点总数: {len(reports)}")

        failing = [c for c in self.check_results if c["unexpected"]]
        if failing:
            logger.info("📝 非预期失败摘要:")
            for i, check in enumerate(failing, 1):
                logger.info(f"  {i}. {check['identity_id']} (步骤 #{check['step']}, {check['unexpected']} 个)")
        logger.info("=" * 80)

        # 重置计数器
        self.step_count = 0
        self.check_results = []
