"""
BinaryInvolutions 二元型对合计算库 - 参考值目录

文献中印刷的精确值，paper-check 逐项复算比对
"""
from dataclasses import dataclass
from fractions import Fraction as R
from typing import Any, Dict, List, Optional


@dataclass
class GoldenValue:
    """单个参考值"""
    expected: Any           # 精确期望值
    source: str             # 出处说明
    note: Optional[str] = None


class GoldenCatalog:
    """参考值管理器"""

    GOLDEN: Dict[str, GoldenValue] = {
        # SYS(6)：z_i z_j (i<=j) 合并后的系数
        'sys6.t2': GoldenValue(
            expected={(0, 0): R(-25, 20328), (0, 1): R(5, 3234), (1, 1): R(-1, 2058),
                      (1, 2): R(22, 735), (2, 2): R(11, 210), (2, 3): R(2)},
            source='SYS(6) 第一个方程',
        ),
        'sys6.t4': GoldenValue(
            expected={(0, 0): R(5, 1331), (0, 1): R(-15, 847), (0, 2): R(5, 121), (1, 1): R(-69, 5390),
                      (1, 2): R(-2, 77), (1, 3): R(2), (2, 2): R(2, 5)},
            source='SYS(6) 第二个方程',
        ),
        'sys6.t6': GoldenValue(
            expected={(0, 0): R(-5, 2541), (0, 1): R(4, 165), (0, 2): R(-7, 33), (0, 3): R(2),
                      (1, 1): R(-1, 35), (1, 2): R(2, 15)},
            source='SYS(6) 第三个方程',
        ),
        'sys6.norm': GoldenValue(
            expected={(0, 0): R(1, 6468), (1, 1): R(11, 22050), (2, 2): R(1, 75), (3, 3): R(1)},
            source='SYS(6) 范数条件',
        ),

        # 符号序列 -> 对合子
        'z.+---+': GoldenValue(expected=(R(4), R(48, 7), R(-1, 5)), source='d=4 非几何对合子'),
        'z.+-+-+': GoldenValue(expected=(R(16), R(24, 7), R(1, 5)), source='d=4 几何对合子'),
        'z.++-++': GoldenValue(expected=(R(-12), R(24, 7), R(3, 5)), source='d=4 中心二次曲线'),
        'z.+++-+++': GoldenValue(expected=(R(40), R(-180, 11), R(20, 7), R(5, 7)), source='d=6 平面三次曲线'),
        'z.++-+-++': GoldenValue(expected=(R(-60), R(-60, 11), R(30, 7), R(3, 7)), source='d=6 μ 恒等式'),

        # ω(5,6;2,4;t)，d=5
        'omega.d5': GoldenValue(
            expected={5: R(-95, 286286), 7: R(575, 1123122), 9: R(-95, 9438)},
            source='d=5 的 (Q^5,(Q^6,F)_2)_4 展开',
            note='印刷式只给出绝对值；符号由直接超越计算确定',
        ),

        # λ(x1^6 + x2^6) 的 Cayley 系数，以 q 的单项式 {指数: 系数} 表示
        'lambda.x1^6+x2^6': GoldenValue(
            expected=[{(0, 1, 2): R(-1)}, {(3, 0, 0): R(1, 2), (0, 0, 3): R(-1, 2)}, {(2, 1, 0): R(1)}],
            source='六次型 λ = (Q^3,F)_5',
        ),
        'cubic.x1^6+x2^6+x1^2x2^4': GoldenValue(
            expected={(3, 0, 0): R(1), (1, 2, 0): R(4, 5), (2, 0, 1): R(1, 5), (0, 0, 3): R(1)},
            source='六次型的平面三次曲线 (Q^3,F)_6',
        ),

        # 两个调和四次型
        'j.x1^4+x2^4': GoldenValue(expected=R(1), source='调和四次型 G_s'),
        'j.x1^3x2+x1x2^3': GoldenValue(expected=R(1), source='调和四次型 G_t'),
    }

    def __init__(self, custom: Optional[Dict[str, GoldenValue]] = None):
        """
        初始化目录

        Args:
            custom: 额外或覆盖的参考值
        """
        self.values = self.GOLDEN.copy()
        if custom:
            self.values.update(custom)

    def get(self, name: str) -> GoldenValue:
        if name not in self.values:
            raise KeyError(f"未知的参考值: {name}")
        return self.values[name]

    def names(self) -> List[str]:
        return sorted(self.values)
