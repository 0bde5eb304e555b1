# BinaryInvolutions 二元型对合计算库 - 测试
