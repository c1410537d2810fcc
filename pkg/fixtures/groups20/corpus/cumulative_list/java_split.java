import java.util.ArrayList;
import java.util.List;

static int partialSum(int k) {
    return k * (k - 1) / 2;
}

static List<Integer> cumulativeList(int n) {
    List<Integer> sums = new ArrayList<Integer>();
    for (int i = 0; i < n; i++) {
        sums.add(partialSum(i + 1));
    }
    return sums;
}
