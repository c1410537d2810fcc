import java.util.ArrayList;
import java.util.List;

static List<Integer> cumulativeList(int n) {
    List<Integer> sums = new ArrayList<Integer>();
    int i = 0;
    int total = 0;
    while (i < n) {
        total = total + i;
        sums.add(total);
        i++;
    }
    return sums;
}
