"""
BinaryInvolutions 二元型对合计算库 - 结果模板

各子命令的 JSON 结果结构
"""
from typing import Dict, List, Sequence

from forms.binary_form import BinaryForm
from involution.canonical import CanonicalBasis
from involution.involutor import Involutor
from involution.sign_sequence import SignSequence
from recoupling.omega import CompoundExpansion
from recoupling.sqrt_rational import SqrtRational
from recoupling.theta import ThetaTable


class ResultTemplates:
    """结果模板集合"""

    @staticmethod
    def form_result(key: str, form: BinaryForm) -> Dict:
        return {key: form.to_dict()}

    @staticmethod
    def involutor_result(involutor: Involutor, signs: SignSequence = None) -> Dict:
        result = {'z': [v for v in involutor.z]}
        if signs is not None:
            result['sign'] = str(signs)
        return result

    @staticmethod
    def involutor_list(entries: Sequence, verified: Sequence) -> List[Dict]:
        """
        involutors 子命令的数组

        Args:
            entries: (符号序列, 对合子) 列表
            verified: 与 entries 同序的验证结果
        """
        return [
            {'sign': str(signs), 'z': list(involutor.z), 'verified': ok}
            for (signs, involutor), ok in zip(entries, verified)
        ]

    @staticmethod
    def canonical_result(basis: CanonicalBasis, canonical: bool) -> Dict:
        result = basis.to_dict()
        result['canonical'] = canonical
        return result

    @staticmethod
    def omega_result(expansion: CompoundExpansion) -> Dict:
        return {
            'omega': expansion.to_dict(),
            'terms': [
                {'t': term.t, 'coefficient': term.coefficient,
                 'delta_power': term.delta_power, 'index': term.index}
                for term in expansion.terms
            ],
        }

    @staticmethod
    def theta_result(table: ThetaTable) -> Dict:
        return {'theta': table.to_dict()}

    @staticmethod
    def sixj_result(value: SqrtRational) -> Dict:
        return {'sixj': value.to_dict(), 'simplified': str(value.simplified())}
